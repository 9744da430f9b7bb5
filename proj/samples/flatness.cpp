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

// Flatness factor of the octacode lattice against Z^8 on a small tau grid,
// and the tau where it drops to 1/n.

#include <cstdio>

#include <z4lat/z4lat.hpp>

int main() {
    using namespace z4lat;

    SwePoly oct(8);
    oct.add({8, 0, 0}, 1);
    oct.add({0, 8, 0}, 16);
    oct.add({0, 0, 8}, 1);
    oct.add({4, 0, 4}, 14);
    oct.add({3, 4, 1}, 112);
    oct.add({1, 4, 3}, 112);

    LatticeSpec e8 = lattice_a4(oct), z8 = lattice_zn(8);
    std::printf("%6s %12s %12s\n", "tau", "eps(E8)", "eps(Z^8)");
    for (long double tau : {0.6L, 0.8L, 1.0L, 1.5L, 2.0L})
        std::printf("%6.2Lf %12.6Lf %12.6Lf\n", tau, flatness_factor(e8, tau), flatness_factor(z8, tau));
    std::printf("threshold: %.4Lf (E8), %.4Lf (Z^8)\n", tau_threshold(e8), tau_threshold(z8));
}
