#include "input.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "toric/errors.hpp"

namespace toric::cli {

namespace {

using nlohmann::json;

json parse_document(const std::string& document) {
  try {
    return json::parse(document);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Integer integer_of(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(v.get<std::uint64_t>());
    return Integer(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    bool ok = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                        [](char c) { return c >= '0' && c <= '9'; });
    if (ok && s != "-") return Integer(s);
  }
  throw InputError(where + ": expected an integer");
}

std::vector<Integer> integers_of(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array of integers");
  std::vector<Integer> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(integer_of(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::string slurp(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot read " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

SemigroupInput parse_input(const std::string& document) {
  const json doc = parse_document(document);
  if (!doc.is_object()) throw InputError("document must be a JSON object");
  if (!doc.contains("rank") || !doc["rank"].is_number_unsigned() || doc["rank"].get<std::size_t>() == 0)
    throw InputError("\"rank\" must be a positive integer");
  const std::size_t d = doc["rank"].get<std::size_t>();
  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw InputError("\"generators\" must be an array");

  PointedPolicy policy = PointedPolicy::required;
  if (doc.contains("pointed")) {
    const json& p = doc["pointed"];
    if (p == "required") policy = PointedPolicy::required;
    else if (p == "check") policy = PointedPolicy::check;
    else if (p == "skip") policy = PointedPolicy::skip;
    else throw InputError("\"pointed\" must be \"required\", \"check\" or \"skip\"");
  }

  bool cone = true;
  if (doc.contains("semigroup")) {
    const json& k = doc["semigroup"];
    if (k == "cone") cone = true;
    else if (k == "generated") cone = false;
    else throw InputError("\"semigroup\" must be \"cone\" or \"generated\"");
  }

  std::vector<LatticeVector> gens;
  const json& g = doc["generators"];
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto coords = integers_of(g[i], "generators[" + std::to_string(i) + "]");
    if (coords.size() != d)
      throw InputError("generators[" + std::to_string(i) + "] has " + std::to_string(coords.size()) +
                       " entries, rank is " + std::to_string(d));
    gens.push_back(LatticeVector(std::move(coords)));
  }
  const bool pointed = is_strongly_convex(Cone(d, gens));
  if (policy == PointedPolicy::required && !pointed) throw InputError("cone contains a line");
  if (rank(gens, d) != d) throw InputError("generators do not span the lattice");

  AffineSemigroup s(d, gens);
  if (cone && pointed) s = saturate(s);
  return SemigroupInput{std::move(gens), policy, cone, std::move(s)};
}

SemigroupInput read_input(const std::filesystem::path& file) {
  try {
    return parse_input(slurp(file));
  } catch (const InputError& e) {
    throw InputError(file.string() + ": " + e.what());
  }
}

std::vector<Binomial> parse_relations(const std::string& document, std::size_t variables) {
  const json doc = parse_document(document);
  if (!doc.is_object() || !doc.contains("pairs") || !doc["pairs"].is_array())
    throw InputError("\"pairs\" must be an array");
  std::vector<Binomial> out;
  const json& pairs = doc["pairs"];
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string where = "pairs[" + std::to_string(i) + "]";
    if (!pairs[i].is_array() || pairs[i].size() != 2)
      throw InputError(where + ": expected [u, w]");
    Binomial b{integers_of(pairs[i][0], where + "[0]"), integers_of(pairs[i][1], where + "[1]")};
    if (b.lhs.size() != variables || b.rhs.size() != variables)
      throw InputError(where + ": exponent vectors need " + std::to_string(variables) + " entries");
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<Binomial> read_relations(const std::filesystem::path& file, std::size_t variables) {
  try {
    return parse_relations(slurp(file), variables);
  } catch (const InputError& e) {
    throw InputError(file.string() + ": " + e.what());
  }
}

std::vector<std::vector<std::size_t>> parse_follow(const std::string& text) {
  std::vector<std::vector<std::size_t>> out;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<std::size_t> subset;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != item.size() || v < 1)
        throw InputError("--follow: \"" + item + "\" is not a positive index");
      subset.push_back(static_cast<std::size_t>(v - 1));
    }
    std::sort(subset.begin(), subset.end());
    if (subset.empty() || std::adjacent_find(subset.begin(), subset.end()) != subset.end())
      throw InputError("--follow: group \"" + group + "\" must list distinct indices");
    out.push_back(std::move(subset));
  }
  if (out.empty()) throw InputError("--follow: no subsets given");
  return out;
}

}  // namespace toric::cli
