#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "blowchern/operators.hpp"

namespace blowchern {

struct VerificationReport {
  std::string check;
  nlohmann::json parameters = nlohmann::json::object();
  bool pass = false;
  /// "0" on success, otherwise the offending difference in canonical form.
  std::string residual = "0";
  double elapsed_ms = 0;
};

double elapsed_ms_since(std::chrono::steady_clock::time_point start);

/// Truncation degree used by the universal checks when none is given.
inline int default_max_degree(int d) { return 2 * d + 2; }

/// g_*(alpha) = d - 1 in the universal ring.
VerificationReport verify_pushforward_identity(int d, std::optional<int> max_degree = std::nullopt);
/// g^*c(N) - zeta alpha = (1-zeta) c(N (x) O(1)) in the universal ring.
VerificationReport verify_restriction_identity(int d, std::optional<int> max_degree = std::nullopt);
/// The (1-zeta) c(NN(1))/c(NN) operator against f^*cY + Porteous, on f^*H^k
/// and f^*n_i; also checks that it times the normal-bundle operator gives
/// c(NN(1)) c(CC(1)) for E of rank `rank_e`.
VerificationReport verify_oldrec_equals_porteous(int d, int rank_e,
                                                 std::optional<int> max_degree = std::nullopt);
/// Log-tangent form against Porteous with c_i(N) = e_i(z).
VerificationReport verify_difflp_equals_porteous(int d, std::optional<int> max_degree = std::nullopt);
/// Global-bundle normal class against the parsed operator on `cases` random
/// (Nhat, Chat) pairs.
VerificationReport verify_simlem_equals_main(int d, int cases = 20, std::uint64_t seed = 1);
/// d = 1: Porteous term zero, log-tangent factor 1, operator form the identity.
VerificationReport verify_codim_one(std::optional<int> max_degree = std::nullopt);
/// Both degenerate cases of the proper-transform operator, its relation to
/// the normal-bundle operator, and a geometric anchor fixing the twist sign.
VerificationReport verify_newnormal_extremes(int dprime, int e, Twist twist = Twist::MinusExceptional,
                                             std::optional<int> max_degree = std::nullopt);
/// j^* j_*(1) = -zeta.
VerificationReport verify_self_intersection(int d, std::optional<int> max_degree = std::nullopt);
/// f^* i_* cX = j_*(c_{d-1}(g^*N / O(-1)) g^*cX) under bl_equal.
VerificationReport verify_key_formula(int d, std::optional<int> max_degree = std::nullopt);

/// "0" when equal, else "f_*: <diff>; j^*: <diff>".
std::string pair_residual(const BlowupClass& a, const BlowupClass& b);

std::string to_text(const VerificationReport& r);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace blowchern
