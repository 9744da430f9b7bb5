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

// Exhaustive search over double circulant codes of length 2*eta.
// usage: search_dcc [pdcc|bdcc] [eta] [threads]

#include <cstdlib>
#include <iostream>
#include <string>

#include <z4lat/z4lat.hpp>

int main(int argc, char** argv) {
    using namespace z4lat;

    SearchSpace s;
    s.family = parse_family(argc > 1 ? argv[1] : "bdcc");
    s.eta = argc > 2 ? std::atoi(argv[2]) : 4;
    s.symmetry = true;
    int threads = argc > 3 ? std::atoi(argv[3]) : 4;

    SearchOutcome o = run_search(s, {}, threads);
    std::cout << o.candidates_total << " classes, " << o.fsd_count << " formally self-dual\n";
    for (size_t i = 0; i < o.results.size() && i < 5; ++i) {
        const auto& r = o.results[i];
        std::cout << r.rank << "  " << r.params_text << "  d_lee " << r.d_lee << "  xi " << static_cast<double>(r.xi)
                  << "\n";
    }
}
