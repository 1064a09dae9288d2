#pragma once

#include <optional>

#include "gwpt/rational_function.hpp"
#include "gwpt/report.hpp"
#include "gwpt/series.hpp"

namespace gwpt {

// v^d coefficient of prod_{n>=1} (1 - (-q)^n v)^n, known below q^q_order.
// PT series of the local curve P(O(-1)+O(-1)+O) in class d[C].
TruncatedSeries pt_local_curve(int d, int q_order);

// 1 / (d (2 sin(du/2))^2), known below u^u_order.
TruncatedSeries gw_connected_multiple_cover(int d, int u_order);

// v^d coefficient of exp(sum_e F_e v^e) with F_e the connected series above.
TruncatedSeries gw_disconnected_local(int d, int u_order);

struct LocalCorrespondenceOptions {
    int initial_q_order = 16;
    int max_q_order = 512;
    int slack = 4;
};

struct LocalCorrespondenceResult {
    CheckRecord record;
    std::optional<RationalFunction> pt_rational;
    int q_order_used = 0;
    bool symmetric = false;
};

// Reconstructs the PT series as a rational function (doubling the q-order until Pade
// succeeds), substitutes q = -e^{iu} and compares with the disconnected GW series.
LocalCorrespondenceResult verify_local_correspondence(int d, int u_order, const LocalCorrespondenceOptions& opt = {});
// Same comparison with a caller-supplied PT series (no retries).
LocalCorrespondenceResult verify_local_correspondence(int d, const TruncatedSeries& pt, int u_order, int slack = 4);

} // namespace gwpt
