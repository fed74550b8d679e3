#include "gensub/operators.hpp"

#include <algorithm>
#include <numeric>

#include "gensub/error.hpp"
#include "gensub/kernels.hpp"

namespace gensub {

std::string_view to_string(ArgMode mode) {
  return mode == ArgMode::kWildcard ? "wildcards" : "intervals";
}

std::string interval_label(std::string_view lo, std::string_view hi) {
  std::string out;
  out.reserve(lo.size() + hi.size() + 3);
  out += '[';
  out += lo;
  out += ',';
  out += hi;
  out += ']';
  return out;
}

std::pair<std::string, std::string> split_interval_label(std::string_view label) {
  if (label.size() < 5 || label.front() != '[' || label.back() != ']')
    throw Error("malformed interval label: " + std::string(label));
  const std::string_view body = label.substr(1, label.size() - 2);
  int nesting = 0;
  std::optional<std::size_t> comma;
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char ch = body[i];
    if (ch == '<' || ch == '[') ++nesting;
    else if (ch == '>' || ch == ']') --nesting;
    else if (ch == ',' && nesting == 0) {
      if (comma) throw Error("malformed interval label: " + std::string(label));
      comma = i;
    }
    if (nesting < 0) throw Error("malformed interval label: " + std::string(label));
  }
  if (!comma || nesting != 0 || *comma == 0 || *comma + 1 == body.size())
    throw Error("malformed interval label: " + std::string(label));
  return {std::string(body.substr(0, *comma)), std::string(body.substr(*comma + 1))};
}

namespace {

ArgPoset containment_order(const Poset& s, std::vector<std::pair<std::size_t, std::size_t>> ends,
                           ArgMode mode) {
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

  std::vector<std::string> labels;
  labels.reserve(ends.size());
  for (auto [lo, hi] : ends) labels.push_back(interval_label(s.element(lo), s.element(hi)));

  std::vector<std::size_t> perm(ends.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });

  ArgPoset out;
  out.source = std::make_shared<const Poset>(s);
  out.mode = mode;
  std::vector<std::string> sorted;
  sorted.reserve(perm.size());
  for (std::size_t i : perm) {
    sorted.push_back(std::move(labels[i]));
    out.endpoints.push_back(ends[i]);
  }

  const auto& e = out.endpoints;
  BitMatrix order = kernels::fill(e.size(), [&](std::size_t i, std::size_t j) {
    return s.leq(e[j].first, e[i].first) && s.leq(e[i].second, e[j].second);
  });
  out.base = Poset::from_order(std::move(sorted), std::move(order));
  return out;
}

}  // namespace

ArgPoset wc(const Poset& s) {
  const Bounds b = bounds(s);
  if (!b.top || !b.bottom) throw Error("wc requires bounded poset");
  const std::size_t top = s.require(*b.top);
  const std::size_t bottom = s.require(*b.bottom);

  std::vector<std::pair<std::size_t, std::size_t>> ends;
  ends.reserve(3 * s.size());
  for (std::size_t t = 0; t < s.size(); ++t) {
    ends.emplace_back(t, t);
    ends.emplace_back(bottom, t);
    ends.emplace_back(t, top);
  }
  return containment_order(s, std::move(ends), ArgMode::kWildcard);
}

ArgPoset int_op(const Poset& s) {
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t l = 0; l < s.size(); ++l)
    for (std::size_t u = 0; u < s.size(); ++u)
      if (s.leq(l, u)) ends.emplace_back(l, u);
  return containment_order(s, std::move(ends), ArgMode::kInterval);
}

Poset ppp(const Poset& c, const std::set<std::string>& generic_subset, const ArgPoset& args,
          const ArgLabel& label) {
  struct Entry {
    std::string name;
    std::size_t cls;
    std::optional<std::size_t> arg;
  };

  std::vector<Entry> entries;
  for (const auto& g : generic_subset) {
    if (!c.contains(g)) throw UnknownElement(g);
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::string& name = c.element(i);
    if (!generic_subset.count(name)) {
      entries.push_back({name, i, std::nullopt});
      continue;
    }
    for (std::size_t a = 0; a < args.size(); ++a) {
      std::string arg = label ? label(a) : args.base.element(a);
      entries.push_back({name + "<" + arg + ">", i, a});
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].name == entries[i - 1].name)
      throw Error("ppp produced duplicate element " + entries[i].name);

  const std::optional<std::size_t> null_class = c.index_of("Null");
  BitMatrix order = kernels::fill(entries.size(), [&](std::size_t i, std::size_t j) {
    const Entry& lo = entries[i];
    const Entry& hi = entries[j];
    if (!lo.arg && null_class && lo.cls == *null_class) return true;
    if (!hi.arg) return c.leq(lo.cls, hi.cls);
    if (!lo.arg) return false;
    return c.leq(lo.cls, hi.cls) && args.base.leq(*lo.arg, *hi.arg);
  });

  std::vector<std::string> names;
  names.reserve(entries.size());
  for (auto& e : entries) names.push_back(std::move(e.name));
  return Poset::from_order(std::move(names), std::move(order));
}

}  // namespace gensub
