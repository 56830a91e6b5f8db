#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gausslink/diagram.hpp"

namespace gausslink {

enum class MoveFamily { Omega1, Omega2, Omega3 };

/// Oriented move variants. Omega2a/b insert or remove a pair whose head
/// order follows the tail order ("parallel" strands); Omega2c/d the
/// reversed order ("antiparallel"). The second letter fixes the sign of
/// the window-first arrow (+ for a/c, - for b/d). Omega3a..h label the
/// eight oriented triangle moves; Omega3a is the class whose two Gauss
/// presentations carry signs (+,-,+) on the (top-mid, top-bottom,
/// mid-bottom) arrows.
enum class MoveVariant {
    Omega1a,
    Omega1b,
    Omega2a,
    Omega2b,
    Omega2c,
    Omega2d,
    Omega3a,
    Omega3b,
    Omega3c,
    Omega3d,
    Omega3e,
    Omega3f,
    Omega3g,
    Omega3h,
};

enum class Polarity { Positive, Negative, None };

MoveFamily family_of(MoveVariant v);
std::string to_string(MoveVariant v);
std::string to_string(Polarity p);
std::optional<MoveVariant> variant_from_string(const std::string& s);

struct MoveKind {
    MoveVariant variant;
    Polarity polarity;
    auto operator<=>(const MoveKind&) const = default;
};

/// Every applicable (variant, polarity) combination.
std::vector<MoveKind> all_move_kinds();
std::vector<MoveKind> negative_move_kinds();

/// An ordered reading of two cyclically adjacent slots: second follows
/// first along the circle.
struct SlotWindow {
    Endpoint first;
    Endpoint second;
    auto operator<=>(const SlotWindow&) const = default;
};

/// Where a positive move puts a new two-slot block on a component.
/// wrapped=false: both slots inserted contiguously before old slot `gap`
/// (gap == length appends at the end). wrapped=true: the block straddles
/// the base point - second slot at position 0, first slot at the end.
struct InsertionPoint {
    int component = 0;
    int gap = 0;
    bool wrapped = false;
    auto operator<=>(const InsertionPoint&) const = default;
};

/// An applicable move instance on a specific diagram.
/// Negative Omega1: arrows = {kink}, windows = {its slot window}.
/// Negative Omega2: arrows = {u, v}, windows = {tail window, head window}.
/// Omega3: arrows = {top-mid, top-bottom, mid-bottom} by strand role,
///         windows = {top, middle, bottom}.
/// Positive Omega1: insertions = {point}; sign, head_first.
/// Positive Omega2: insertions = {over point (tails), under point (heads)};
///         sign = sign of the first inserted arrow, aligned = heads keep
///         the tail order.
struct MoveSite {
    MoveVariant variant = MoveVariant::Omega1a;
    Polarity polarity = Polarity::None;
    std::vector<int> arrows;
    std::vector<SlotWindow> windows;
    std::vector<InsertionPoint> insertions;
    int sign = 0;
    bool head_first = false;
    bool aligned = false;
    bool operator==(const MoveSite&) const = default;
};

/// All sites of the requested kinds, deterministically ordered. Negative
/// sites are listed once per removable arrow set; positive families once
/// per (insertion point(s), sign, order) choice.
std::vector<MoveSite> enumerate_sites(const GaussDiagram& g, std::span<const MoveKind> kinds);
std::vector<MoveSite> enumerate_sites(const GaussDiagram& g);

/// Rewrites g at the site. Throws std::invalid_argument when the site is
/// stale (does not match g); g itself is never modified.
GaussDiagram apply_move(const GaussDiagram& g, const MoveSite& site);

/// A site on `after` (= apply_move(g, site)) whose application restores g
/// exactly.
MoveSite inverse_site(const MoveSite& site, const GaussDiagram& after);

/// Omega3 rewrite table: one entry per legal directed triangle
/// configuration. order_bits has bit 0/1/2 set when the top/middle/bottom
/// window is read canonical-arrow-second; sign_mask has bit 0/1/2 set when
/// the top-mid/top-bottom/mid-bottom arrow is negative.
struct Omega3Config {
    int order_bits;
    int sign_mask;
    MoveVariant variant;
};
const std::vector<Omega3Config>& omega3_config_table();

/// Conjugation rows used to expand a non-a triangle move into
/// Omega2/Omega3a primitives (Omega3a is the only Omega3 appearing in
/// fully expanded sequences).
struct ConjugationRow {
    MoveVariant target;
    MoveVariant positive;  // Omega2 variant inserted first
    MoveVariant inner;     // Omega3 variant of the middle move
    MoveVariant negative;  // Omega2 variant removed last
};
const std::vector<ConjugationRow>& conjugation_rows();

/// Expands an Omega3b..Omega3h site into a chained sequence of positive
/// Omega2, Omega3a and negative Omega2 sites whose composite equals
/// apply_move(g, site). Element k applies to the result of elements 0..k-1.
/// Throws std::invalid_argument for Omega3a sites and std::runtime_error
/// when no expansion is found (a defect).
std::vector<MoveSite> decompose_via_table2(const GaussDiagram& g, const MoveSite& site);

/// Two-component closure of a directed triangle configuration: the two
/// strands other than `lone_strand` (0=top, 1=middle, 2=bottom) are joined
/// into component 0, the lone strand becomes component 1. Used as witness
/// diagrams carrying a site of each variant.
GaussDiagram omega3_closure(const Omega3Config& config, int lone_strand);

/// JSON round-trip for sites (used by the CLI and verdict counterexamples).
std::string site_to_json(const MoveSite& site);
MoveSite site_from_json(const std::string& text);

}  // namespace gausslink
