#include "steinobd/front.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "steinobd/error.hpp"

namespace steinobd {

char event_letter(EventKind kind) {
  switch (kind) {
  case EventKind::LeftCusp:
    return 'L';
  case EventKind::RightCusp:
    return 'R';
  case EventKind::Crossing:
    return 'X';
  }
  return '?';
}

std::string to_string(const FrontEvent& e) {
  return std::string(1, event_letter(e.kind)) + std::to_string(e.position);
}

int first_illegal_event(const std::vector<FrontEvent>& events, int& final_count) {
  int k = 0;
  for (std::size_t idx = 0; idx < events.size(); ++idx) {
    const auto& e = events[idx];
    if (e.kind == EventKind::LeftCusp) {
      if (e.position < 1 || e.position > k + 1) {
        final_count = k;
        return static_cast<int>(idx);
      }
      k += 2;
    } else {
      if (e.position < 1 || e.position > k - 1) {
        final_count = k;
        return static_cast<int>(idx);
      }
      if (e.kind == EventKind::RightCusp) k -= 2;
    }
  }
  final_count = k;
  return -1;
}

namespace {

std::string bound_message(const FrontEvent& e, int k) {
  std::ostringstream os;
  os << "illegal position in " << to_string(e) << " with " << k << " strands";
  if (e.kind == EventKind::LeftCusp)
    os << " (need 1 <= i <= " << k + 1 << ")";
  else
    os << " (need 1 <= i <= " << k - 1 << ")";
  return os.str();
}

std::string unclosed_message(const std::vector<FrontEvent>& events, int k) {
  int lefts = 0, rights = 0;
  for (const auto& e : events) {
    if (e.kind == EventKind::LeftCusp) ++lefts;
    if (e.kind == EventKind::RightCusp) ++rights;
  }
  std::ostringstream os;
  os << "front is not closed: " << k << " strands remain (" << lefts
     << " left cusps, " << rights << " right cusps)";
  return os.str();
}

} // namespace

FrontDiagram::FrontDiagram(std::vector<FrontEvent> events) : events_(std::move(events)) {
  int k = 0;
  int bad = first_illegal_event(events_, k);
  if (bad >= 0)
    throw ValidationError("event " + std::to_string(bad) + ": " +
                          bound_message(events_[bad], k));
  if (k != 0) throw ValidationError(unclosed_message(events_, k));
}

std::string FrontDiagram::word() const {
  std::string out;
  for (const auto& e : events_) {
    if (!out.empty()) out += ' ';
    out += to_string(e);
  }
  return out;
}

FrontDiagram concat(const FrontDiagram& a, const FrontDiagram& b) {
  auto events = a.events();
  events.insert(events.end(), b.events().begin(), b.events().end());
  return FrontDiagram(std::move(events));
}

// ---------------------------------------------------------------------------

OrientedFront OrientedFront::trace(FrontDiagram diagram) {
  OrientedFront f;
  f.diagram_ = std::move(diagram);
  const auto& events = f.diagram_.events();
  f.event_strands_.resize(events.size());

  // Replay, tracking which strand id sits at each position (0-based here).
  std::vector<int> at;
  for (std::size_t idx = 0; idx < events.size(); ++idx) {
    const auto& e = events[idx];
    const int i = e.position - 1;
    const int ev = static_cast<int>(idx);
    switch (e.kind) {
    case EventKind::LeftCusp: {
      int up = static_cast<int>(f.strands_.size());
      int lo = up + 1;
      f.strands_.push_back({-1, true, ev, -1, true, false});
      f.strands_.push_back({-1, true, ev, -1, false, false});
      at.insert(at.begin() + i, {up, lo});
      f.event_strands_[idx] = {up, lo};
      break;
    }
    case EventKind::RightCusp: {
      int up = at[i], lo = at[i + 1];
      f.strands_[up].end_event = ev;
      f.strands_[up].upper_at_end = true;
      f.strands_[lo].end_event = ev;
      f.strands_[lo].upper_at_end = false;
      at.erase(at.begin() + i, at.begin() + i + 2);
      f.event_strands_[idx] = {up, lo};
      break;
    }
    case EventKind::Crossing:
      f.event_strands_[idx] = {at[i], at[i + 1]};
      std::swap(at[i], at[i + 1]);
      break;
    }
  }

  // Each strand has one partner at its left cusp and one at its right cusp,
  // so every component is a cycle alternating rightward/leftward strands.
  auto start_partner = [&](int s) {
    const auto& es = f.event_strands_[f.strands_[s].start_event];
    return es.first == s ? es.second : es.first;
  };
  auto end_partner = [&](int s) {
    const auto& es = f.event_strands_[f.strands_[s].end_event];
    return es.first == s ? es.second : es.first;
  };

  // Strand ids are in creation order and the upper strand of a cusp is
  // created first, so the first unvisited id is the top strand of the
  // component's first left cusp.
  for (int s = 0; s < static_cast<int>(f.strands_.size()); ++s) {
    if (f.strands_[s].component >= 0) continue;
    const int c = f.components_++;
    f.first_cusp_.push_back(f.strands_[s].start_event);
    int cur = s;
    do {
      f.strands_[cur].component = c;
      f.strands_[cur].rightward_default = true;
      int back = end_partner(cur);
      f.strands_[back].component = c;
      f.strands_[back].rightward_default = false;
      cur = start_partner(back);
    } while (cur != s);
  }
  f.orientation_.assign(f.components_, Orientation::AsDefault);
  return f;
}

void OrientedFront::check_component(int c) const {
  if (c < 0 || c >= components_)
    throw ValidationError("component index " + std::to_string(c) + " out of range (front has " +
                          std::to_string(components_) + " components)");
}

Orientation OrientedFront::orientation(int component) const {
  check_component(component);
  return orientation_[component];
}

int OrientedFront::first_left_cusp(int component) const {
  check_component(component);
  return first_cusp_[component];
}

bool OrientedFront::rightward(int strand) const {
  const auto& s = strands_.at(strand);
  return s.rightward_default == (orientation_[s.component] == Orientation::AsDefault);
}

OrientedFront OrientedFront::with_orientation(int component, Orientation o) const {
  check_component(component);
  OrientedFront copy = *this;
  copy.orientation_[component] = o;
  return copy;
}

OrientedFront OrientedFront::reversed(int component) const {
  check_component(component);
  return with_orientation(component, orientation_[component] == Orientation::AsDefault
                                         ? Orientation::Reversed
                                         : Orientation::AsDefault);
}

// ---------------------------------------------------------------------------

int crossing_sign(const OrientedFront& f, int event) {
  const auto& e = f.diagram().events().at(event);
  if (e.kind != EventKind::Crossing)
    throw ValidationError("event " + std::to_string(event) + " is not a crossing");
  const auto& es = f.event_strands()[event];
  return f.rightward(es.first) == f.rightward(es.second) ? 1 : -1;
}

CuspDirection cusp_direction(const OrientedFront& f, int event) {
  const auto& e = f.diagram().events().at(event);
  const auto& es = f.event_strands()[event];
  const bool upper_right = f.rightward(es.first);
  switch (e.kind) {
  case EventKind::RightCusp:
    return upper_right ? CuspDirection::Down : CuspDirection::Up;
  case EventKind::LeftCusp:
    return upper_right ? CuspDirection::Up : CuspDirection::Down;
  case EventKind::Crossing:
    break;
  }
  throw ValidationError("event " + std::to_string(event) + " is not a cusp");
}

namespace {

void require_component(const OrientedFront& f, int c) {
  if (c < 0 || c >= f.component_count())
    throw ValidationError("component index " + std::to_string(c) + " out of range (front has " +
                          std::to_string(f.component_count()) + " components)");
}

int component_of_event(const OrientedFront& f, std::size_t idx) {
  return f.strands()[f.event_strands()[idx].first].component;
}

} // namespace

int writhe(const OrientedFront& f, int component) {
  require_component(f, component);
  const auto& events = f.diagram().events();
  int w = 0;
  for (std::size_t idx = 0; idx < events.size(); ++idx) {
    if (events[idx].kind != EventKind::Crossing) continue;
    const auto& es = f.event_strands()[idx];
    if (f.strands()[es.first].component == component &&
        f.strands()[es.second].component == component)
      w += crossing_sign(f, static_cast<int>(idx));
  }
  return w;
}

int right_cusp_count(const OrientedFront& f, int component) {
  require_component(f, component);
  const auto& events = f.diagram().events();
  int n = 0;
  for (std::size_t idx = 0; idx < events.size(); ++idx)
    if (events[idx].kind == EventKind::RightCusp && component_of_event(f, idx) == component) ++n;
  return n;
}

int thurston_bennequin(const OrientedFront& f, int component) {
  return writhe(f, component) - right_cusp_count(f, component);
}

int rotation_number(const OrientedFront& f, int component) {
  require_component(f, component);
  const auto& events = f.diagram().events();
  int down = 0, up = 0;
  for (std::size_t idx = 0; idx < events.size(); ++idx) {
    if (events[idx].kind == EventKind::Crossing) continue;
    if (component_of_event(f, idx) != component) continue;
    if (cusp_direction(f, static_cast<int>(idx)) == CuspDirection::Down)
      ++down;
    else
      ++up;
  }
  return (down - up) / 2;
}

int linking_number(const OrientedFront& f, int i, int j) {
  require_component(f, i);
  require_component(f, j);
  if (i == j) throw ValidationError("linking number needs two distinct components");
  const auto& events = f.diagram().events();
  int total = 0;
  for (std::size_t idx = 0; idx < events.size(); ++idx) {
    if (events[idx].kind != EventKind::Crossing) continue;
    const auto& es = f.event_strands()[idx];
    int a = f.strands()[es.first].component;
    int b = f.strands()[es.second].component;
    if ((a == i && b == j) || (a == j && b == i)) total += crossing_sign(f, static_cast<int>(idx));
  }
  return total / 2;
}

ClassicalInvariants classical_invariants(const OrientedFront& f) {
  const int c = f.component_count();
  ClassicalInvariants inv;
  inv.tb.resize(c);
  inv.rot.resize(c);
  inv.writhe.resize(c);
  inv.linking.assign(c, std::vector<int>(c, 0));
  for (int k = 0; k < c; ++k) {
    inv.writhe[k] = writhe(f, k);
    inv.tb[k] = inv.writhe[k] - right_cusp_count(f, k);
    inv.rot[k] = rotation_number(f, k);
  }
  for (int a = 0; a < c; ++a)
    for (int b = a + 1; b < c; ++b) inv.linking[a][b] = inv.linking[b][a] = linking_number(f, a, b);
  return inv;
}

OrientedFront stabilize(const OrientedFront& f, int component, StabilizationSign sign) {
  const int e = f.first_left_cusp(component);
  const int i = f.diagram().events()[e].position;
  // Top strand of the first left cusp sits at position i right after event e.
  const bool top_rightward = f.orientation(component) == Orientation::AsDefault;
  const bool want_positive = sign == StabilizationSign::Positive;
  // A zigzag below the strand passes both cusps downward when the strand runs
  // rightward; above it, upward. Leftward traversal flips both.
  const bool below = top_rightward == want_positive;

  auto events = f.diagram().events();
  std::vector<FrontEvent> zigzag;
  if (below)
    zigzag = {{EventKind::LeftCusp, i + 1}, {EventKind::RightCusp, i}};
  else
    zigzag = {{EventKind::LeftCusp, i}, {EventKind::RightCusp, i + 1}};
  events.insert(events.begin() + e + 1, zigzag.begin(), zigzag.end());

  // Component order (by first left cusp) and each default strand are unchanged.
  OrientedFront out = OrientedFront::trace(FrontDiagram(std::move(events)));
  out.orientation_ = f.orientation_;
  return out;
}

FrontDiagram unknot_front() {
  return FrontDiagram({{EventKind::LeftCusp, 1}, {EventKind::RightCusp, 1}});
}

FrontDiagram stabilized_unknot_front(int rot) {
  std::vector<FrontEvent> events;
  const int k = rot < 0 ? -rot : rot;
  events.reserve(2 * static_cast<std::size_t>(k) + 2);
  events.push_back({EventKind::LeftCusp, 1});
  for (int z = 0; z < k; ++z) {
    if (rot > 0) {
      events.push_back({EventKind::LeftCusp, 2});
      events.push_back({EventKind::RightCusp, 1});
    } else {
      events.push_back({EventKind::LeftCusp, 1});
      events.push_back({EventKind::RightCusp, 2});
    }
  }
  events.push_back({EventKind::RightCusp, 1});
  return FrontDiagram(std::move(events));
}

// ---------------------------------------------------------------------------

namespace {

struct Token {
  std::string_view text;
  int line;
  int column;
};

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

std::vector<Token> split_line(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < line.size() && line[end] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[end])))
      ++end;
    out.push_back({line.substr(pos, end - pos), line_no, static_cast<int>(pos) + 1});
    pos = end;
  }
  return out;
}

} // namespace

FrontDocument parse_front_document(std::string_view text) {
  FrontDocument doc;
  std::vector<FrontEvent> events;
  std::vector<Token> where;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? text.size() - start
                                                                             : nl - start);
    ++line_no;
    auto tokens = split_line(line, line_no);
    if (!tokens.empty() && tokens[0].text == "orient") {
      int c = 0;
      if (tokens.size() != 3 || !parse_int(tokens[1].text, c) || c < 0 ||
          tokens[2].text != "reversed")
        throw ParseError("expected 'orient <component-index> reversed'", line_no,
                         tokens[0].column);
      doc.reversed_components.push_back(c);
    } else {
      for (const auto& t : tokens) {
        EventKind kind;
        switch (t.text[0]) {
        case 'L':
          kind = EventKind::LeftCusp;
          break;
        case 'R':
          kind = EventKind::RightCusp;
          break;
        case 'X':
          kind = EventKind::Crossing;
          break;
        default:
          throw ParseError("unexpected token '" + std::string(t.text) + "'", t.line, t.column);
        }
        int position = 0;
        auto digits = t.text.substr(1);
        if (!all_digits(digits) || !parse_int(digits, position))
          throw ParseError("expected digits after '" + std::string(1, t.text[0]) + "' in '" +
                               std::string(t.text) + "'",
                           t.line, t.column);
        events.push_back({kind, position});
        where.push_back(t);
      }
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }

  int k = 0;
  int bad = first_illegal_event(events, k);
  if (bad >= 0)
    throw ParseError(bound_message(events[bad], k), where[bad].line, where[bad].column);
  if (k != 0) throw ParseError(unclosed_message(events, k), line_no, 1);
  doc.diagram = FrontDiagram(std::move(events));
  return doc;
}

FrontDiagram parse_front(std::string_view text) { return parse_front_document(text).diagram; }

OrientedFront load_front(std::string_view text) {
  auto doc = parse_front_document(text);
  auto f = OrientedFront::trace(std::move(doc.diagram));
  for (int c : doc.reversed_components) {
    if (c >= f.component_count())
      throw ParseError("orient directive names component " + std::to_string(c) +
                           " but the front has " + std::to_string(f.component_count()),
                       0, 0);
    f = f.with_orientation(c, Orientation::Reversed);
  }
  return f;
}

OrientedFront load_front_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open front file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return load_front(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0, 0);
  }
}

std::string format_front_document(const OrientedFront& f) {
  std::string out = f.diagram().word();
  out += '\n';
  for (int c = 0; c < f.component_count(); ++c)
    if (f.orientation(c) == Orientation::Reversed)
      out += "orient " + std::to_string(c) + " reversed\n";
  return out;
}

} // namespace steinobd
