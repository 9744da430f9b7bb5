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

// Builds the octacode as a double circulant code and walks it through the
// enumerator, theta series and secrecy gain.

#include <iostream>

#include <z4lat/io.hpp>
#include <z4lat/z4lat.hpp>

int main() {
    using namespace z4lat;

    Z4Matrix block = Z4Matrix::from_rows({{3, 1, 2, 1}, {1, 2, 3, 1}, {3, 3, 3, 2}, {2, 3, 1, 1}});
    Z4Code code = standard_form(double_circulant_generator(block));
    std::cout << "n = " << code.n() << ", type 4^" << code.k1() << " 2^" << code.k2() << "\n";

    SwePoly s = swe(code);
    std::cout << "swe: " << io::poly_to_json(s, {"a", "b", "c"}).dump() << "\n";
    std::cout << "formally self-dual: " << std::boolalpha << swe_is_formally_self_dual(s)
              << ", type " << to_string(classify_type(s)) << "\n";

    QSeries theta = theta_a4(s, 24);
    std::cout << "theta:";
    for (int e = 0; e <= theta.truncation(); ++e)
        if (theta[e] != 0) std::cout << " " << theta[e] << " q^" << quarter_exponent(e);
    std::cout << "\n";

    auto r = secrecy_gain(s);
    std::cout << "secrecy gain " << static_cast<double>(r.xi);
    if (r.exact_xi) std::cout << " = " << io::format_rational(*r.exact_xi);
    std::cout << " at t* = " << static_cast<double>(r.t_star) << "\n";
}
