#pragma once

// Legendrian link fronts encoded as column words.
//
// A front is read left to right, one event per column. Strands are numbered
// 1..k from the top (largest z) down, where k is the current strand count.
//
//   L i   left cusp: two new strands appear at positions i, i+1 (1 <= i <= k+1)
//   R i   right cusp: strands at i, i+1 join and disappear     (1 <= i <= k-1)
//   X i   crossing: strands at i, i+1 swap positions           (1 <= i <= k-1)
//
// At "X i" the strand moving from i to i+1 descends (NW to SE) and is the
// over-strand. With tangents (+-1, -1) for the descending strand and
// (+-1, +1) for the ascending one, the crossing sign is the sign of
// det(over, under):
//
//   descending   ascending   sign
//   rightward    rightward    +1
//   rightward    leftward     -1
//   leftward     rightward    -1
//   leftward     leftward     +1
//
// tb = writhe - #right cusps, rot = (D - U) / 2 where D/U count cusps passed
// downward/upward along the orientation.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace steinobd {

enum class EventKind { LeftCusp, RightCusp, Crossing };

struct FrontEvent {
  EventKind kind;
  int position; // 1-based

  friend bool operator==(const FrontEvent&, const FrontEvent&) = default;
};

char event_letter(EventKind kind);
std::string to_string(const FrontEvent& e);

class FrontDiagram {
public:
  FrontDiagram() = default;

  // Validates the word: every position legal, strand count back to 0.
  // Throws ValidationError naming the offending event index.
  explicit FrontDiagram(std::vector<FrontEvent> events);

  const std::vector<FrontEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }

  // Space separated word, e.g. "L1 R1".
  std::string word() const;

  friend bool operator==(const FrontDiagram&, const FrontDiagram&) = default;

private:
  std::vector<FrontEvent> events_;
};

// Strand count after each prefix; returns the index of the first illegal
// event or -1. final_count receives the count after the last legal event.
int first_illegal_event(const std::vector<FrontEvent>& events, int& final_count);

// Concatenation places the second front to the right of the first (split union).
FrontDiagram concat(const FrontDiagram& a, const FrontDiagram& b);

enum class Orientation { AsDefault, Reversed };

enum class CuspDirection { Down, Up };

enum class StabilizationSign { Positive, Negative };

class OrientedFront {
public:
  // Strand bookkeeping. A strand lives from its left cusp to its right cusp.
  struct Strand {
    int component = -1;
    bool rightward_default = true;
    int start_event = -1; // LeftCusp that creates it
    int end_event = -1;   // RightCusp that kills it
    bool upper_at_start = false;
    bool upper_at_end = false;
  };

  // Strand ids touched by each event: for cusps (upper, lower); for
  // crossings (descending, ascending), i.e. the strands that were at i, i+1.
  struct EventStrands {
    int first = -1;
    int second = -1;
  };

  // Default orientation on every component.
  static OrientedFront trace(FrontDiagram diagram);

  const FrontDiagram& diagram() const { return diagram_; }
  int component_count() const { return components_; }
  const std::vector<Strand>& strands() const { return strands_; }
  const std::vector<EventStrands>& event_strands() const { return event_strands_; }
  Orientation orientation(int component) const;
  const std::vector<Orientation>& orientations() const { return orientation_; }

  // Index of the LeftCusp event that starts the component.
  int first_left_cusp(int component) const;

  // Direction of a strand under the current orientation.
  bool rightward(int strand) const;

  OrientedFront with_orientation(int component, Orientation o) const;
  OrientedFront reversed(int component) const;

private:
  friend OrientedFront stabilize(const OrientedFront&, int, StabilizationSign);

  OrientedFront() = default;
  void check_component(int c) const;

  FrontDiagram diagram_;
  std::vector<Strand> strands_;
  std::vector<EventStrands> event_strands_;
  std::vector<int> first_cusp_;
  std::vector<Orientation> orientation_;
  int components_ = 0;
};

// Sign of the crossing at event index `event` (must be a Crossing).
int crossing_sign(const OrientedFront& f, int event);

// Direction a cusp event is passed along the orientation.
CuspDirection cusp_direction(const OrientedFront& f, int event);

int writhe(const OrientedFront& f, int component);
int right_cusp_count(const OrientedFront& f, int component);
int thurston_bennequin(const OrientedFront& f, int component);
int rotation_number(const OrientedFront& f, int component);

// Half the signed count of crossings between two distinct components.
int linking_number(const OrientedFront& f, int i, int j);

struct ClassicalInvariants {
  std::vector<int> tb;
  std::vector<int> rot;
  std::vector<int> writhe;
  // c x c, symmetric; diagonal left at 0.
  std::vector<std::vector<int>> linking;
};

ClassicalInvariants classical_invariants(const OrientedFront& f);

// Adds one zigzag to the component: tb drops by 1, rot moves by the sign.
OrientedFront stabilize(const OrientedFront& f, int component, StabilizationSign sign);

// Standard unknot "L1 R1".
FrontDiagram unknot_front();

// Unknot with |rot| zigzags on its top strand, written directly as a word.
// Under the default orientation it has tb = -1 - |rot| and the given rot.
FrontDiagram stabilized_unknot_front(int rot);

// ---------------------------------------------------------------------------
// Front-word text format.

struct FrontDocument {
  FrontDiagram diagram;
  std::vector<int> reversed_components; // from "orient <c> reversed"
};

FrontDocument parse_front_document(std::string_view text);
FrontDiagram parse_front(std::string_view text);

// Parses and applies orientation directives. Component indices in directives
// are checked against the traced front.
OrientedFront load_front(std::string_view text);
OrientedFront load_front_file(const std::string& path);

std::string format_front_document(const OrientedFront& f);

} // namespace steinobd
