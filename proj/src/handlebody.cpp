#include "steinobd/handlebody.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "steinobd/checked.hpp"
#include "steinobd/error.hpp"

namespace steinobd {

namespace {

void check_source(const HandleSource& s) {
  if (!s.front) throw ValidationError("handle source has no front");
  if (s.component < 0 || s.component >= s.front->component_count())
    throw ValidationError("handle source component " + std::to_string(s.component) +
                          " out of range (front has " +
                          std::to_string(s.front->component_count()) + " components)");
}

} // namespace

SteinHandle::SteinHandle(int64_t tb, int64_t rot) : tb_(tb), rot_(rot) {
  checked::sub(tb, 1);
}

SteinHandle::SteinHandle(HandleSource source) {
  check_source(source);
  tb_ = thurston_bennequin(*source.front, source.component);
  rot_ = rotation_number(*source.front, source.component);
  source_ = std::move(source);
}

SteinHandle::SteinHandle(int64_t tb, int64_t rot, HandleSource source) : SteinHandle(source) {
  if (tb != tb_ || rot != rot_)
    throw ValidationError("handle declares tb=" + std::to_string(tb) + " rot=" +
                          std::to_string(rot) + " but its front has tb=" + std::to_string(tb_) +
                          " rot=" + std::to_string(rot_));
}

bool realizable_by_unknot(int64_t tb, int64_t rot) {
  if (tb > -1) return false;
  if (checked::abs(rot) > -tb - 1) return false;
  return ((rot - (tb + 1)) % 2) == 0;
}

SteinHandlebody::SteinHandlebody(std::vector<SteinHandle> handles,
                                 std::optional<LinkingMatrix> linking)
    : handles_(std::move(handles)), linking_(std::move(linking)) {
  if (handles_.empty()) throw ValidationError("a Stein handlebody needs at least one 2-handle");
  if (linking_) {
    const auto n = handles_.size();
    if (linking_->size() != n) throw ValidationError("linking matrix size does not match b2");
    for (std::size_t i = 0; i < n; ++i) {
      if ((*linking_)[i].size() != n) throw ValidationError("linking matrix is not square");
      for (std::size_t j = 0; j < i; ++j)
        if ((*linking_)[i][j] != (*linking_)[j][i])
          throw ValidationError("linking matrix is not symmetric at (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
    }
  }
}

std::optional<LinkingMatrix> SteinHandlebody::linking() const {
  if (linking_) return linking_;
  for (const auto& h : handles_)
    if (!h.source()) return std::nullopt;
  const auto n = handles_.size();
  LinkingMatrix lk(n, std::vector<int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = *handles_[i].source();
      const auto& b = *handles_[j].source();
      if (a.front != b.front) continue;
      if (a.component == b.component)
        throw ValidationError("handles " + std::to_string(i) + " and " + std::to_string(j) +
                              " share one attaching circle");
      lk[i][j] = lk[j][i] = linking_number(*a.front, a.component, b.component);
    }
  return lk;
}

IntVector c1_cochain(const SteinHandlebody& x) {
  std::vector<int64_t> rot;
  rot.reserve(x.b2());
  for (const auto& h : x.handles()) rot.push_back(h.rot());
  return IntVector(std::move(rot));
}

int64_t rotation_divisor(const SteinHandlebody& x) { return gcd_nonneg(c1_cochain(x)); }

SteinHandlebody boundary_connected_sum(const SteinHandlebody& a, const SteinHandlebody& b) {
  auto handles = a.handles();
  handles.insert(handles.end(), b.handles().begin(), b.handles().end());
  std::optional<LinkingMatrix> lk;
  auto la = a.linking();
  auto lb = b.linking();
  if (la && lb) {
    const auto na = a.b2(), n = handles.size();
    lk.emplace(n, std::vector<int64_t>(n, 0));
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < na; ++j) (*lk)[i][j] = (*la)[i][j];
    for (std::size_t i = 0; i < b.b2(); ++i)
      for (std::size_t j = 0; j < b.b2(); ++j) (*lk)[na + i][na + j] = (*lb)[i][j];
  }
  return SteinHandlebody(std::move(handles), std::move(lk));
}

IntMatrix intersection_form(const SteinHandlebody& x) {
  auto lk = x.linking();
  if (!lk) throw ValidationError("intersection form needs linking data (link lines or fronts)");
  const auto n = x.b2();
  IntMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = i == j ? x.handles()[i].framing() : (*lk)[i][j];
  return q;
}

SteinHandlebody canonical_model(int64_t r, int64_t n) {
  if (r < 0) throw ValidationError("rotation divisor must be >= 0");
  if (n < 1) throw ValidationError("b2 must be >= 1");
  if (r > 100000) throw ValidationError("rotation divisor too large for a front realization");
  std::vector<SteinHandle> handles;
  handles.reserve(static_cast<std::size_t>(n));
  for (int64_t k = 0; k < n; ++k) {
    const int64_t rot = (r % 2 == 1 || k == 0) ? r : 0;
    auto front = std::make_shared<const OrientedFront>(
        OrientedFront::trace(stabilized_unknot_front(static_cast<int>(rot))));
    handles.emplace_back(-1 - rot, rot, HandleSource{std::move(front), 0, {}});
  }
  return SteinHandlebody(std::move(handles));
}

// ---------------------------------------------------------------------------

namespace {

bool parse_i64(std::string_view s, int64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

struct Field {
  std::string_view text;
  int column;
};

std::vector<Field> fields_of(std::string_view line) {
  std::vector<Field> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == '#') break;
    if (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r') {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r' &&
           line[end] != '#')
      ++end;
    out.push_back({line.substr(pos, end - pos), static_cast<int>(pos) + 1});
    pos = end;
  }
  return out;
}

struct LinkEntry {
  int64_t i, j, value;
  int line;
};

} // namespace

SteinHandlebody parse_handlebody(std::string_view text, const std::string& base_dir) {
  std::vector<SteinHandle> handles;
  std::vector<LinkEntry> links;
  std::map<std::string, std::shared_ptr<const OrientedFront>> fronts;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::string_view line =
        text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
    ++line_no;
    const auto fields = fields_of(line);
    if (!fields.empty()) {
      const auto& head = fields[0];
      if (head.text == "handle") {
        std::optional<int64_t> tb, rot, component;
        std::optional<std::string> front;
        for (std::size_t k = 1; k < fields.size(); ++k) {
          const auto& f = fields[k];
          const auto eq = f.text.find('=');
          if (eq == std::string_view::npos)
            throw ParseError("expected key=value, got '" + std::string(f.text) + "'", line_no,
                             f.column);
          const auto key = f.text.substr(0, eq);
          const auto value = f.text.substr(eq + 1);
          if (key == "front") {
            if (value.empty()) throw ParseError("empty front path", line_no, f.column);
            front = std::string(value);
            continue;
          }
          int64_t v = 0;
          if (!parse_i64(value, v))
            throw ParseError("expected an integer for '" + std::string(key) + "'", line_no,
                             f.column);
          if (key == "tb")
            tb = v;
          else if (key == "rot")
            rot = v;
          else if (key == "component")
            component = v;
          else
            throw ParseError("unknown handle field '" + std::string(key) + "'", line_no, f.column);
        }
        if (tb.has_value() != rot.has_value())
          throw ParseError("handle needs both tb= and rot=", line_no, head.column);
        if (component && !front)
          throw ParseError("component= without front=", line_no, head.column);
        if (!tb && !front)
          throw ParseError("handle needs tb=/rot= or front=", line_no, head.column);
        try {
          if (front) {
            auto& shared = fronts[*front];
            if (!shared) {
              const auto p = std::filesystem::path(*front).is_absolute()
                                 ? std::filesystem::path(*front)
                                 : std::filesystem::path(base_dir) / *front;
              shared = std::make_shared<const OrientedFront>(load_front_file(p.string()));
            }
            HandleSource src{shared, static_cast<int>(component.value_or(0)), *front};
            if (tb)
              handles.emplace_back(*tb, *rot, std::move(src));
            else
              handles.emplace_back(std::move(src));
          } else {
            handles.emplace_back(*tb, *rot);
          }
        } catch (const ParseError&) {
          throw;
        } catch (const Error& e) {
          throw ParseError(e.what(), line_no, head.column);
        }
      } else if (head.text == "link") {
        int64_t v[3];
        if (fields.size() != 4 || !parse_i64(fields[1].text, v[0]) ||
            !parse_i64(fields[2].text, v[1]) || !parse_i64(fields[3].text, v[2]))
          throw ParseError("expected 'link <i> <j> <int>'", line_no, head.column);
        links.push_back({v[0], v[1], v[2], line_no});
      } else {
        throw ParseError("unknown record '" + std::string(head.text) + "'", line_no, head.column);
      }
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }

  if (handles.empty()) throw ParseError("no handle records", 0, 0);

  std::optional<LinkingMatrix> lk;
  if (!links.empty()) {
    const auto n = static_cast<int64_t>(handles.size());
    lk.emplace(handles.size(), std::vector<int64_t>(handles.size(), 0));
    for (const auto& l : links) {
      if (l.i < 0 || l.j < 0 || l.i >= n || l.j >= n || l.i == l.j)
        throw ParseError("link indices must be distinct handle indices in [0, " +
                             std::to_string(n) + ")",
                         l.line, 1);
      (*lk)[l.i][l.j] = (*lk)[l.j][l.i] = l.value;
    }
  }
  return SteinHandlebody(std::move(handles), std::move(lk));
}

SteinHandlebody load_handlebody_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open handlebody file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  auto dir = std::filesystem::path(path).parent_path();
  try {
    return parse_handlebody(ss.str(), dir.empty() ? "." : dir.string());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0, 0);
  }
}

} // namespace steinobd
