#include "frobenius/generators.hpp"

#include "frobenius/errors.hpp"

namespace frobenius {

Generators::Generators(std::vector<Int> values)
    : values_(std::move(values))
{
    if (values_.size() != 2 && values_.size() != 3)
        throw DomainError("expected two or three generators, got "
                          + std::to_string(values_.size()));
    for (const Int& v : values_)
        if (v < 1)
            throw DomainError("generators must be positive, got " + v.str());
}

Generators::Generators(std::initializer_list<Int> values)
    : Generators(std::vector<Int>(values))
{
}

} // namespace frobenius
