#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gausslink {

/// One endpoint slot on one circle of a Gauss diagram.
/// Slots are numbered 0..len-1 along the circle; slot 0 is the base point.
struct Endpoint {
    int component = 0;
    int position = 0;
    auto operator<=>(const Endpoint&) const = default;
};

/// A signed directed chord. The tail sits on the over-passage of the
/// crossing, the head on the under-passage; sign is the crossing writhe.
struct Arrow {
    Endpoint tail;
    Endpoint head;
    int sign = 1;  // +1 or -1
    auto operator<=>(const Arrow&) const = default;
};

/// How two diagrams (or a pattern and a subdiagram) are identified.
enum class Equivalence {
    BasedExact,        // component order and base points both fixed
    RotateBasepoints,  // each circle's base point may rotate
    RotateAndPermute,  // base points rotate and components permute
};

/// A based, ordered-component Gauss diagram. Every slot of every component
/// must be covered by exactly one arrow endpoint. Plain value type; all
/// operations on diagrams return new values.
struct GaussDiagram {
    std::vector<int> component_lengths;
    std::vector<Arrow> arrows;

    int component_count() const { return static_cast<int>(component_lengths.size()); }
    int crossing_count() const { return static_cast<int>(arrows.size()); }
    int total_slots() const;

    /// Arrow order is not semantic: diagrams compare as arrow sets.
    bool operator==(const GaussDiagram& other) const;
};

/// Which arrow endpoint covers a slot. arrow < 0 marks an uncovered slot.
struct SlotRef {
    int arrow = -1;
    bool is_head = false;
};

/// Per-component slot occupancy. Requires structural soundness to be total.
std::vector<std::vector<SlotRef>> slot_table(const GaussDiagram& d);

/// All violated well-formedness rules, empty when the diagram is clean.
/// Structural rules (range, tail != head, exact slot coverage) make the
/// diagram unusable; the per-component parity rule is reported but such
/// diagrams still make sense as virtual link diagrams.
std::vector<std::string> validate(const GaussDiagram& d);

/// Range + coverage + tail != head. Parity of component lengths is not
/// checked here: odd components occur in valid virtual diagrams.
bool is_structurally_sound(const GaussDiagram& d);

/// Cyclic successor/predecessor of a slot on its component.
Endpoint next_slot(const GaussDiagram& d, Endpoint e);
Endpoint prev_slot(const GaussDiagram& d, Endpoint e);

/// New diagram with component c based at old slot rotation[c].
GaussDiagram rotated(const GaussDiagram& d, const std::vector<int>& rotation);

/// New diagram where old component c becomes component perm[c].
GaussDiagram with_permuted_components(const GaussDiagram& d, const std::vector<int>& perm);

/// New diagram with every arrow's direction reversed (signs kept).
GaussDiagram with_reversed_arrows(const GaussDiagram& d);

/// True iff some transformation allowed by `mode` maps a onto b exactly.
bool isomorphic(const GaussDiagram& a, const GaussDiagram& b, Equivalence mode);

/// Distinguished representative of d's equivalence class under `mode`:
/// the lexicographically minimal encoding over all allowed transformations.
GaussDiagram canonical_form(const GaussDiagram& d, Equivalence mode);

/// Stable byte encoding of the diagram as-is (used for hashing and as the
/// total order behind canonical_form).
std::string encode(const GaussDiagram& d);

}  // namespace gausslink
