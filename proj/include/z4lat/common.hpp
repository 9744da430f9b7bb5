//Copyright (c) 2026, The z4lat authors
//
//Licensed under the Apache License, Version 2.0 (the "License");
//you may not use this file except in compliance with the License.
//You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
//Unless required by applicable law or agreed to in writing, software
//distributed under the License is distributed on an "AS IS" BASIS,
//WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//See the License for the specific language governing permissions and
//limitations under the License.

#ifndef Z4LAT_COMMON_HPP
#define Z4LAT_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace z4lat {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Base of everything the library throws on bad input or exhausted limits.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what, std::string kind = "error")
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what, "validation") {}
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, BigInt required)
        : Error(what, "budget"), required_(std::move(required)) {}
    const BigInt& required() const noexcept { return required_; }

private:
    BigInt required_;
};

class ClosureViolation : public Error {
public:
    ClosureViolation(const std::string& what, int i, int j)
        : Error(what, "closure"), i_(i), j_(j) {}
    // basis indices of the offending pair; (-1,-1) when A1 is not inside A2
    int first() const noexcept { return i_; }
    int second() const noexcept { return j_; }

private:
    int i_, j_;
};

class TailBoundError : public Error {
public:
    TailBoundError(const std::string& what, double bound)
        : Error(what, "tail_bound"), bound_(bound) {}
    double bound() const noexcept { return bound_; }

private:
    double bound_;
};

class NotGleasonForm : public Error {
public:
    explicit NotGleasonForm(const std::string& what) : Error(what, "not_gleason_form") {}
};

// Limit on the number of codewords a single enumeration may visit, as log2.
struct EnumerationBudget {
    int log2_max = 26;
};

inline BigInt pow2(unsigned e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw ValidationError(msg);
}

}  // namespace z4lat

#endif
