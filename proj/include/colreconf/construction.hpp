#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "colreconf/colouring.hpp"
#include "colreconf/graph.hpp"
#include "colreconf/limits.hpp"

namespace colreconf {

/// The 7-colouring of the 16-cycle, read from vertex 0 in increasing index order.
inline constexpr std::string_view kBaseAlpha = "1234572345123467";
/// The frozen 8-colouring of the 16-cycle, same reading order.
inline constexpr std::string_view kBaseBeta = "1234567812345678";

inline constexpr std::size_t kBaseOrder = 16;
inline constexpr std::size_t kBaseCyclePower = 4;
inline constexpr std::size_t kAlphaColours = 7;
inline constexpr std::size_t kBetaColours = 8;

/// Largest copy count build_family accepts.
inline constexpr std::size_t kMaxCopies = 64;

/// A graph together with its two designated colourings. For the
/// constructed family, copy j occupies vertices 16j..16j+15 and uses colour
/// blocks 7j+1..7j+7 under alpha and 8j+1..8j+8 under beta.
struct PaperInstance {
    std::size_t copies = 1;
    Graph graph;
    Colouring alpha;
    Colouring beta;
};

/// Fourth power of C16 plus every missing pair coloured differently under
/// both alpha and beta.
PaperInstance build_base();

/// Complete join of p copies of the base graph with block-shifted colourings.
/// Throws InputError for p == 0 and ResourceError above kMaxCopies.
PaperInstance build_family(std::size_t p);

/// The edge rule on its own: adds {u,v} to h whenever it is missing and
/// alpha(u) != alpha(v) and beta(u) != beta(v).
Graph close_under_distinct_colours(const Graph& h, const Colouring& alpha, const Colouring& beta);

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus status);

struct CheckResult {
    std::string name;
    std::string expected;
    std::string observed;
    CheckStatus status = CheckStatus::fail;
    std::string note;
};

struct VerificationReport {
    std::size_t copies = 1;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::vector<CheckResult> checks;

    /// True iff no check failed. Skipped checks are neither passes nor failures.
    bool passed() const;
    const CheckResult* find(std::string_view name) const;
};

/// Runs every claim about an instance and records the outcome of each.
///
/// Checks, in report order: alpha_proper, beta_proper, beta_frozen,
/// two_k2_free, p5_free, then either chromatic_number (copies == 1) or
/// chromatic_upper, chromatic_lower and a derived chromatic_number (copies >= 2), then
/// not_mixing_witness. Failures and sub-check errors become report entries;
/// this function does not throw for a malformed instance.
VerificationReport verify(const PaperInstance& instance, const Limits& limits = {});

}  // namespace colreconf
