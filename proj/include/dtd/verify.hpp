#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace dtd {

struct CheckResult {
    int number = 0;
    std::string name;
    std::string description;
    bool pass = true;
    long cases = 0;
    std::vector<std::string> failures;  // the first few, for diagnosis
    double seconds = 0;

    void fail(const std::string& msg);
    nlohmann::json to_json() const;
};

struct StructureSizes {
    int tiling_n = 5;
    int flip_n = 8;
    int partition_n = 10;
    int pattern_n = 8;
    int confluence_n = 5;
    int triangular_n = 7;
};

CheckResult check_golden_matrices();
CheckResult check_matrix_bridge(int min_n, int max_n, int workers = 1);
CheckResult check_ddu_count();
CheckResult check_type_d_vs_b(int max_len, int workers = 1);
CheckResult check_p_mn(int max_total, int workers = 1);
CheckResult check_kenyon_wilson(int max_size, int workers = 1);
CheckResult check_q_b(int max_total, int workers = 1);
CheckResult check_omega(int max_len, int workers = 1);
CheckResult check_tiles_statistic(int max_len, int workers = 1);
CheckResult check_area_remark();
CheckResult check_positivity(int max_n, int workers = 1);
CheckResult check_structure(const StructureSizes& s, int workers = 1);

// Every identity with all length parameters capped at max_length; fixed
// instances from the worked examples are always included.
std::vector<CheckResult> run_suite(int max_length, int workers = 1);

}  // namespace dtd
