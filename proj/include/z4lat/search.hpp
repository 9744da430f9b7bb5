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

#ifndef Z4LAT_SEARCH_HPP
#define Z4LAT_SEARCH_HPP

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "constructions.hpp"
#include "secrecy.hpp"

namespace z4lat {

enum class Family { Pdcc, Bdcc, OextPdcc, OextBdcc };

inline std::string to_string(Family f) {
    switch (f) {
        case Family::Pdcc: return "pdcc";
        case Family::Bdcc: return "bdcc";
        case Family::OextPdcc: return "oext-pdcc";
        default: return "oext-bdcc";
    }
}

inline Family parse_family(const std::string& s) {
    if (s == "pdcc") return Family::Pdcc;
    if (s == "bdcc") return Family::Bdcc;
    if (s == "oext-pdcc") return Family::OextPdcc;
    if (s == "oext-bdcc") return Family::OextBdcc;
    throw ValidationError("unknown family '" + s + "' (pdcc, bdcc, oext-pdcc, oext-bdcc)");
}

struct SearchSpace {
    Family family = Family::Pdcc;
    int eta = 1;
    std::optional<CirculantSeed> base_seed;    // oext-pdcc
    std::optional<BorderParams> base_border;   // oext-bdcc
    bool symmetry = false;                     // canonical representatives only (pdcc, bdcc)
};

struct SearchBudget {
    std::uint64_t max_candidates = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();
    EnumerationBudget enumeration{};
};

struct SearchResult {
    std::vector<int> params;
    std::string params_text;
    SwePoly swe;
    bool is_fsd = false;
    double xi = 0;
    int d_lee = 0;
    int rank = 0;
};

struct SearchOutcome {
    std::vector<SearchResult> results;  // FSD candidates, ranked
    std::uint64_t candidates_total = 0;
    std::uint64_t candidates_visited = 0;
    std::uint64_t fsd_count = 0;
    bool complete = true;
    double best_xi = 1;  // the uncoded lattice
    double reduction_factor = 1;
};

// ---- parameter vectors ----

inline int param_length(const SearchSpace& s) {
    switch (s.family) {
        case Family::Pdcc: return s.eta;
        case Family::Bdcc: return s.eta + 2;
        default: return 2 * s.eta;
    }
}

inline std::uint64_t candidate_count(const SearchSpace& s) {
    int digits = param_length(s);
    int bits = (s.family == Family::OextPdcc || s.family == Family::OextBdcc) ? digits : 2 * digits;
    require(bits < 63, "search space too large");
    return std::uint64_t{1} << bits;
}

// index -> params, most significant digit first so index order is lexicographic
inline std::vector<int> candidate_params(const SearchSpace& s, std::uint64_t idx) {
    const int len = param_length(s);
    const bool bin = s.family == Family::OextPdcc || s.family == Family::OextBdcc;
    std::vector<int> p(len);
    for (int i = len - 1; i >= 0; --i) {
        p[i] = static_cast<int>(idx & (bin ? 1 : 3));
        idx >>= bin ? 1 : 2;
    }
    return p;
}

inline std::string join(const std::vector<int>& v, size_t from = 0, size_t to = std::string::npos) {
    std::string s;
    to = std::min(to, v.size());
    for (size_t i = from; i < to; ++i) {
        if (i > from) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

inline std::string params_text(const SearchSpace& s, const std::vector<int>& p) {
    switch (s.family) {
        case Family::Pdcc: return join(p);
        case Family::Bdcc: return join(p, 0, 3) + ";" + join(p, 3);
        default: return "a=" + join(p, 0, s.eta) + ";c=" + join(p, s.eta);
    }
}

inline Z4Code build_candidate(const SearchSpace& s, const std::vector<int>& p) {
    switch (s.family) {
        case Family::Pdcc: return pdcc(p);
        case Family::Bdcc: {
            BorderParams b{p[0], p[1], p[2], std::vector<int>(p.begin() + 3, p.end())};
            return bdcc(b);
        }
        case Family::OextPdcc: {
            require(s.base_seed.has_value(), "oext-pdcc needs a base seed");
            require(static_cast<int>(s.base_seed->size()) == s.eta, "base seed length must equal eta");
            OddExtensionParams o{circulant(*s.base_seed), std::vector<int>(p.begin(), p.begin() + s.eta),
                                 std::vector<int>(p.begin() + s.eta, p.end())};
            return odd_extension(o);
        }
        default: {
            require(s.base_border.has_value(), "oext-bdcc needs base border parameters");
            require(s.base_border->eta() == s.eta, "base border parameters must have eta entries");
            OddExtensionParams o{bordered_block(*s.base_border), std::vector<int>(p.begin(), p.begin() + s.eta),
                                 std::vector<int>(p.begin() + s.eta, p.end())};
            return odd_extension(o);
        }
    }
}

// ---- symmetry reduction ----

// orbit of params under seed rotation/reversal and global negation
inline std::vector<std::vector<int>> symmetry_orbit(const SearchSpace& s, const std::vector<int>& p) {
    require(s.family == Family::Pdcc || s.family == Family::Bdcc, "symmetry reduction applies to pdcc and bdcc");
    const size_t off = s.family == Family::Bdcc ? 3 : 0;
    std::vector<int> head(p.begin(), p.begin() + static_cast<long>(off)), seed(p.begin() + static_cast<long>(off), p.end());
    const size_t m = seed.size();
    std::vector<std::vector<int>> out;
    for (int neg = 0; neg < 2; ++neg)
        for (int rev = 0; rev < 2; ++rev)
            for (size_t rot = 0; rot < std::max<size_t>(m, 1); ++rot) {
                std::vector<int> q(head);
                for (size_t i = 0; i < m; ++i) {
                    size_t j = rev ? (m - i) % m : i;
                    q.push_back(seed[(j + rot) % m]);
                }
                if (neg)
                    for (auto& v : q) v = (4 - v) & 3;
                out.push_back(q);
            }
    return out;
}

inline std::vector<int> canonical_params(const SearchSpace& s, const std::vector<int>& p) {
    auto orbit = symmetry_orbit(s, p);
    return *std::min_element(orbit.begin(), orbit.end());
}

inline bool is_canonical(const SearchSpace& s, const std::vector<int>& p) { return canonical_params(s, p) == p; }

// canonical candidate indices in increasing order
inline std::vector<std::uint64_t> symmetry_reduce(const SearchSpace& s) {
    std::vector<std::uint64_t> out;
    const std::uint64_t total = candidate_count(s);
    for (std::uint64_t i = 0; i < total; ++i)
        if (is_canonical(s, candidate_params(s, i))) out.push_back(i);
    return out;
}

// ---- driver ----

namespace detail {

struct ScoredSwe {
    bool fsd = false;
    double xi = 0;
    int d_lee = 0;
};

struct WorkerOut {
    std::vector<SearchResult> results;
    std::uint64_t visited = 0, fsd = 0;
    bool stopped = false;
};

inline void run_chunk(const SearchSpace& s, const std::vector<std::uint64_t>& idx, size_t begin, size_t end,
                      const SearchBudget& budget, std::chrono::steady_clock::time_point t0, WorkerOut& out) {
    std::map<std::vector<std::uint64_t>, ScoredSwe> cache;
    for (size_t k = begin; k < end; ++k) {
        if (std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() > budget.max_seconds) {
            out.stopped = true;
            return;
        }
        auto params = candidate_params(s, idx[k]);
        Z4Code c = build_candidate(s, params);
        ++out.visited;
        // |C|^2 = 4^n fast rejection
        if (c.log2_size() != c.n()) continue;
        SweCensus census = swe_census(c, 1, budget.enumeration);
        auto it = cache.find(census.count);
        if (it == cache.end()) {
            ScoredSwe sc;
            SwePoly p = swe_from_census(census);
            sc.fsd = swe_is_formally_self_dual(p);
            if (sc.fsd) {
                auto f = [&](long double t) { return h_of_t(p, t); };
                long double t = minimise_scalar(f, 0, 1, 1024, 1e-10L);
                sc.xi = static_cast<double>(std::max<long double>(1, std::pow(2.0L, c.n()) / f(t)));
                sc.d_lee = min_distances(p).lee;
            }
            it = cache.emplace(census.count, sc).first;
        }
        if (!it->second.fsd) continue;
        ++out.fsd;
        SearchResult r;
        r.params = params;
        r.params_text = params_text(s, params);
        r.swe = swe_from_census(census);
        r.is_fsd = true;
        r.xi = it->second.xi;
        r.d_lee = it->second.d_lee;
        out.results.push_back(std::move(r));
    }
}

}  // namespace detail

inline SearchOutcome run_search(const SearchSpace& s, const SearchBudget& budget = {}, int threads = 1) {
    require(s.eta >= 1, "eta must be positive");
    if (s.family == Family::Bdcc) require(s.eta >= 2, "bdcc needs eta >= 2");
    SearchOutcome o;
    const std::uint64_t total = candidate_count(s);
    std::vector<std::uint64_t> idx;
    if (s.symmetry) {
        idx = symmetry_reduce(s);
        o.reduction_factor = static_cast<double>(total) / static_cast<double>(idx.size());
    } else {
        idx.resize(total);
        for (std::uint64_t i = 0; i < total; ++i) idx[i] = i;
    }
    o.candidates_total = idx.size();
    if (idx.size() > budget.max_candidates) {
        idx.resize(budget.max_candidates);
        o.complete = false;
    }

    threads = std::max(1, threads);
    auto t0 = std::chrono::steady_clock::now();
    std::vector<detail::WorkerOut> parts(threads);
    const size_t chunk = (idx.size() + threads - 1) / threads;
    if (threads == 1) {
        detail::run_chunk(s, idx, 0, idx.size(), budget, t0, parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            size_t b = std::min(idx.size(), chunk * t), e = std::min(idx.size(), chunk * (t + 1));
            pool.emplace_back([&, b, e, t] { detail::run_chunk(s, idx, b, e, budget, t0, parts[t]); });
        }
        for (auto& th : pool) th.join();
    }
    for (auto& p : parts) {
        o.candidates_visited += p.visited;
        o.fsd_count += p.fsd;
        if (p.stopped) o.complete = false;
        for (auto& r : p.results) o.results.push_back(std::move(r));
    }
    std::sort(o.results.begin(), o.results.end(), [](const SearchResult& a, const SearchResult& b) {
        if (a.xi != b.xi) return a.xi > b.xi;
        return a.params < b.params;
    });
    for (size_t i = 0; i < o.results.size(); ++i) o.results[i].rank = static_cast<int>(i) + 1;
    if (!o.results.empty()) o.best_xi = std::max(1.0, o.results.front().xi);
    return o;
}

}  // namespace z4lat

#endif
