#pragma once

// Opt-in record of which checker and construction entry points have run.
// Used by the suite coverage self-test; disabled it costs one relaxed load.

#include <array>
#include <atomic>
#include <cstddef>
#include <string_view>
#include <vector>

namespace mwb::coverage {

enum class Op : std::size_t {
    as_generalized,
    jointly_strongly_epic,
    is_strong_gp,
    is_schreier_point,
    representatives,
    is_schreier_epi,
    is_regular_schreier_epi,
    is_schreier_gp,
    pullback_gp,
    canonical_point,
    map_F,
    map_G,
    product_gp,
    equalizer_gp,
    witness_g,
    count_
};

inline constexpr std::array<std::string_view, static_cast<std::size_t>(Op::count_)> op_names{
    "as_generalized", "jointly_strongly_epic", "is_strong_gp", "is_schreier_point",
    "representatives", "is_schreier_epi", "is_regular_schreier_epi", "is_schreier_gp",
    "pullback_gp", "canonical_point", "map_F", "map_G", "product_gp", "equalizer_gp",
    "witness_g"};

namespace detail {
inline std::atomic<bool> enabled{false};
inline std::array<std::atomic<bool>, static_cast<std::size_t>(Op::count_)> seen{};
}  // namespace detail

inline void note(Op op) noexcept {
    if (!detail::enabled.load(std::memory_order_relaxed)) return;
    auto& flag = detail::seen[static_cast<std::size_t>(op)];
    if (!flag.load(std::memory_order_relaxed)) flag.store(true, std::memory_order_relaxed);
}

inline void enable(bool on = true) noexcept { detail::enabled.store(on); }

inline void reset() noexcept {
    for (auto& f : detail::seen) f.store(false);
}

inline std::vector<std::string_view> missing() {
    std::vector<std::string_view> out;
    for (std::size_t i = 0; i < op_names.size(); ++i)
        if (!detail::seen[i].load()) out.push_back(op_names[i]);
    return out;
}

}  // namespace mwb::coverage
