#include "tuvote/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace tuvote {

WeakOrder::WeakOrder(std::vector<std::vector<AltIndex>> classes, std::size_t m)
    : classes_(std::move(classes)), rank_(m, 0) {
  std::size_t covered = 0;
  for (std::size_t t = 0; t < classes_.size(); ++t) {
    auto& cls = classes_[t];
    if (cls.empty()) throw std::invalid_argument("empty indifference class");
    std::sort(cls.begin(), cls.end());
    for (AltIndex c : cls) {
      if (c >= m) throw std::invalid_argument("alternative index out of range");
      if (rank_[c] != 0) throw std::invalid_argument("alternative listed twice in one order");
      rank_[c] = t + 1;
      ++covered;
    }
  }
  if (covered != m) throw std::invalid_argument("weak order does not cover every alternative");
}

WeakOrder WeakOrder::linear(const std::vector<AltIndex>& order) {
  std::vector<std::vector<AltIndex>> classes;
  classes.reserve(order.size());
  for (AltIndex c : order) classes.push_back({c});
  return WeakOrder(std::move(classes), order.size());
}

std::vector<AltIndex> WeakOrder::top_initial_segment(std::size_t t) const {
  if (t < 1 || t > classes_.size()) {
    throw std::out_of_range("rank threshold " + std::to_string(t) + " outside 1.." +
                            std::to_string(classes_.size()));
  }
  std::vector<AltIndex> out;
  for (std::size_t r = 0; r < t; ++r) out.insert(out.end(), classes_[r].begin(), classes_[r].end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AltIndex> WeakOrder::flattened() const {
  std::vector<AltIndex> out;
  out.reserve(rank_.size());
  for (const auto& cls : classes_) out.insert(out.end(), cls.begin(), cls.end());
  return out;
}

bool is_valid_alternative_name(std::string_view name) {
  if (name.empty()) return false;
  for (char ch : name) {
    if (ch == ',' || ch == '>' || ch == '{' || ch == '}' || ch == '~' || ch == ':') return false;
    if (std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

namespace {

void validate_alternatives(const std::vector<std::string>& names) {
  if (names.empty()) throw std::invalid_argument("profile needs at least one alternative");
  std::unordered_map<std::string, std::size_t> seen;
  for (const auto& name : names) {
    if (!is_valid_alternative_name(name)) {
      throw std::invalid_argument("invalid alternative name '" + name + "'");
    }
    if (!seen.emplace(name, 0).second) {
      throw std::invalid_argument("duplicate alternative name '" + name + "'");
    }
  }
}

AltIndex find_name(const std::vector<std::string>& names, std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::invalid_argument("unknown alternative '" + std::string(name) + "'");
  return static_cast<AltIndex>(it - names.begin());
}

}  // namespace

Profile::Profile(std::vector<std::string> alternatives, std::vector<WeakOrder> voters)
    : alternatives_(std::move(alternatives)), voters_(std::move(voters)) {
  validate_alternatives(alternatives_);
  if (voters_.empty()) throw std::invalid_argument("profile needs at least one voter");
  for (const auto& v : voters_) {
    if (v.num_alternatives() != alternatives_.size()) {
      throw std::invalid_argument("voter order over the wrong number of alternatives");
    }
  }
}

AltIndex Profile::index_of(std::string_view name) const { return find_name(alternatives_, name); }

std::vector<AltIndex> Profile::top_initial_segment(VoterIndex i, std::size_t t) const {
  return voters_.at(i).top_initial_segment(t);
}

long long Profile::majority_margin(AltIndex b, AltIndex a) const {
  if (a == b) throw std::invalid_argument("majority margin of an alternative against itself");
  long long margin = 0;
  for (const auto& v : voters_) {
    if (v.prefers(b, a)) ++margin;
    else if (v.prefers(a, b)) --margin;
  }
  return margin;
}

bool Profile::all_linear() const {
  return std::all_of(voters_.begin(), voters_.end(), [](const WeakOrder& v) { return v.is_linear(); });
}

std::size_t Profile::max_classes() const {
  std::size_t r = 0;
  for (const auto& v : voters_) r = std::max(r, v.num_classes());
  return r;
}

ApprovalProfile::ApprovalProfile(std::vector<std::string> alternatives,
                                 std::vector<std::vector<AltIndex>> ballots)
    : alternatives_(std::move(alternatives)), ballots_(std::move(ballots)) {
  validate_alternatives(alternatives_);
  if (ballots_.empty()) throw std::invalid_argument("profile needs at least one voter");
  for (auto& b : ballots_) {
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
      throw std::invalid_argument("alternative approved twice on one ballot");
    }
    if (!b.empty() && b.back() >= alternatives_.size()) {
      throw std::invalid_argument("alternative index out of range");
    }
  }
}

bool ApprovalProfile::approves(VoterIndex i, AltIndex c) const {
  const auto& b = ballots_.at(i);
  return std::binary_search(b.begin(), b.end(), c);
}

AltIndex ApprovalProfile::index_of(std::string_view name) const {
  return find_name(alternatives_, name);
}

Profile ApprovalProfile::to_profile() const {
  const std::size_t m = alternatives_.size();
  std::vector<WeakOrder> voters;
  voters.reserve(ballots_.size());
  for (const auto& b : ballots_) {
    if (b.empty() || b.size() == m) {
      std::vector<AltIndex> all(m);
      std::iota(all.begin(), all.end(), AltIndex{0});
      voters.emplace_back(std::vector<std::vector<AltIndex>>{all}, m);
      continue;
    }
    std::vector<AltIndex> rest;
    for (AltIndex c = 0; c < m; ++c) {
      if (!std::binary_search(b.begin(), b.end(), c)) rest.push_back(c);
    }
    voters.emplace_back(std::vector<std::vector<AltIndex>>{b, rest}, m);
  }
  return Profile(alternatives_, std::move(voters));
}

std::vector<std::string> default_alternative_names(std::size_t m) {
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t c = 0; c < m; ++c) {
    names.push_back(m <= 26 ? std::string(1, static_cast<char>('a' + c)) : "x" + std::to_string(c + 1));
  }
  return names;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = trim(text.substr(start, end - start));
    if (!line.empty()) lines.push_back({number, line});
    start = end + 1;
  }
  return lines;
}

std::size_t parse_count(std::string_view s, std::size_t line, const char* what) {
  s = trim(s);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(s) + "'");
  }
  return value;
}

struct Header {
  std::vector<std::string> names;
  std::size_t first_body_line;
};

Header parse_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(1, "empty input");
  const std::size_t m = parse_count(lines[0].text, lines[0].number, "alternative count");
  if (m == 0) throw ParseError(lines[0].number, "alternative count must be positive");
  if (lines.size() < 2) throw ParseError(lines[0].number + 1, "missing alternative names");

  std::vector<std::string> names;
  std::istringstream in{std::string(lines[1].text)};
  for (std::string name; in >> name;) {
    if (!is_valid_alternative_name(name)) {
      throw ParseError(lines[1].number, "invalid alternative name '" + name + "'");
    }
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      throw ParseError(lines[1].number, "duplicate alternative name '" + name + "'");
    }
    names.push_back(std::move(name));
  }
  if (names.size() != m) {
    throw ParseError(lines[1].number, "header declares " + std::to_string(m) + " alternatives but lists " +
                                          std::to_string(names.size()));
  }
  if (lines.size() < 3) throw ParseError(lines[1].number + 1, "profile has no voters");
  return {std::move(names), 2};
}

std::pair<std::size_t, std::string_view> split_count(const Line& line) {
  auto colon = line.text.find(':');
  if (colon == std::string_view::npos) throw ParseError(line.number, "expected '<count>: ...'");
  std::size_t count = parse_count(line.text.substr(0, colon), line.number, "voter count");
  if (count == 0) throw ParseError(line.number, "voter count must be positive");
  return {count, trim(line.text.substr(colon + 1))};
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

AltIndex lookup(const std::vector<std::string>& names, std::string_view name, std::size_t line) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw ParseError(line, "unknown alternative '" + std::string(name) + "'");
  return static_cast<AltIndex>(it - names.begin());
}

// Parses "{n1,n2}" (possibly "{}" when allow_empty) or a bare name.
std::vector<AltIndex> parse_group(std::string_view group, const std::vector<std::string>& names,
                                  std::vector<bool>& used, std::size_t line, bool allow_empty) {
  std::vector<AltIndex> members;
  auto take = [&](std::string_view name) {
    if (name.empty()) throw ParseError(line, "empty alternative name");
    AltIndex c = lookup(names, name, line);
    if (used[c]) throw ParseError(line, "duplicate alternative '" + std::string(name) + "'");
    used[c] = true;
    members.push_back(c);
  };
  if (group.empty()) throw ParseError(line, "empty group");
  if (group.front() == '{') {
    if (group.back() != '}') throw ParseError(line, "unterminated '{' group");
    std::string_view inner = trim(group.substr(1, group.size() - 2));
    if (inner.empty()) {
      if (!allow_empty) throw ParseError(line, "empty indifference class");
      return members;
    }
    for (auto name : split(inner, ',')) take(name);
  } else {
    if (group.find_first_of("{},~") != std::string_view::npos) {
      throw ParseError(line, "malformed group '" + std::string(group) + "'");
    }
    take(group);
  }
  return members;
}

}  // namespace

Profile parse_ranked_profile(std::string_view text) {
  const auto lines = content_lines(text);
  Header header = parse_header(lines);
  const std::size_t m = header.names.size();

  std::vector<WeakOrder> voters;
  for (std::size_t k = header.first_body_line; k < lines.size(); ++k) {
    const Line& line = lines[k];
    auto [count, body] = split_count(line);
    std::vector<bool> used(m, false);
    std::vector<std::vector<AltIndex>> classes;
    for (auto group : split(body, '>')) {
      classes.push_back(parse_group(group, header.names, used, line.number, false));
    }
    for (AltIndex c = 0; c < m; ++c) {
      if (!used[c]) throw ParseError(line.number, "missing alternative '" + header.names[c] + "'");
    }
    WeakOrder order(std::move(classes), m);
    for (std::size_t r = 0; r < count; ++r) voters.push_back(order);
  }
  return Profile(std::move(header.names), std::move(voters));
}

ApprovalProfile parse_approval_profile(std::string_view text) {
  const auto lines = content_lines(text);
  Header header = parse_header(lines);
  const std::size_t m = header.names.size();

  std::vector<std::vector<AltIndex>> ballots;
  for (std::size_t k = header.first_body_line; k < lines.size(); ++k) {
    const Line& line = lines[k];
    auto [count, body] = split_count(line);
    if (body.empty() || body.front() != '{') {
      throw ParseError(line.number, "approval ballot must be a '{...}' set");
    }
    std::vector<bool> used(m, false);
    auto ballot = parse_group(body, header.names, used, line.number, true);
    for (std::size_t r = 0; r < count; ++r) ballots.push_back(ballot);
  }
  return ApprovalProfile(std::move(header.names), std::move(ballots));
}

namespace {

std::string header_text(const std::vector<std::string>& names) {
  std::string out = std::to_string(names.size()) + "\n";
  for (std::size_t c = 0; c < names.size(); ++c) {
    if (c) out += ' ';
    out += names[c];
  }
  out += '\n';
  return out;
}

std::string braced(const std::vector<AltIndex>& members, const std::vector<std::string>& names) {
  std::vector<std::string> sorted;
  for (AltIndex c : members) sorted.push_back(names[c]);
  std::sort(sorted.begin(), sorted.end());
  std::string out = "{";
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (k) out += ',';
    out += sorted[k];
  }
  return out + "}";
}

}  // namespace

std::string serialize(const Profile& profile) {
  std::string out = header_text(profile.alternatives());
  for (const auto& v : profile.voters()) {
    out += "1: ";
    bool first = true;
    for (const auto& cls : v.classes()) {
      if (!first) out += " > ";
      first = false;
      out += cls.size() == 1 ? profile.name(cls.front()) : braced(cls, profile.alternatives());
    }
    out += '\n';
  }
  return out;
}

std::string serialize(const ApprovalProfile& profile) {
  std::string out = header_text(profile.alternatives());
  for (const auto& b : profile.ballots()) out += "1: " + braced(b, profile.alternatives()) + "\n";
  return out;
}

}  // namespace tuvote
