#pragma once

#include "pfib/error.hpp"
#include "pfib/integer.hpp"

#include <string>
#include <vector>

namespace pfib {

/// One named check evaluated for each number of columns n = 1..nmax.
struct CheckRow {
    std::string name;
    std::vector<bool> passed;  ///< index n - 1

    bool all_passed() const;
};

/// count = inner + sper - area for all words with n columns.
struct PickIdentity {
    int n = 0;
    Integer count;
    Integer inner;
    Integer sper;
    Integer area;

    /// "n=5: 15 = 124 + 152 - 261"
    std::string str() const;
};

struct VerifyReport {
    int p = 0;
    int nmax = 0;
    std::vector<CheckRow> rows;
    std::vector<PickIdentity> identities;

    bool passed() const;
    /// Rows of checks against columns n, "ok" / "FAIL" per cell.
    std::string matrix() const;
};

/// Cross-checks statistics, series, bijections and the brute-force oracle
/// for one alphabet bound and every length up to nmax.
VerifyReport verify(int p, int nmax, const Limits& limits = {});

}  // namespace pfib
