/**
 * @file frobenius.hpp
 * @brief Umbrella header for the whole library.
 */
#pragma once

#include "frobenius/diagnostics.hpp"
#include "frobenius/errors.hpp"
#include "frobenius/generators.hpp"
#include "frobenius/integer.hpp"
#include "frobenius/integer_kernel.hpp"
#include "frobenius/lattice.hpp"
#include "frobenius/oracle.hpp"
#include "frobenius/sampling.hpp"
#include "frobenius/solution_basis.hpp"
#include "frobenius/solver.hpp"
