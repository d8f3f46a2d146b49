#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "mucrit/search.hpp"

namespace mucrit {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "mucrit/1";

Json strings(const std::vector<u64>& xs) {
  Json a = Json::array();
  for (u64 x : xs) a.push_back(std::to_string(x));
  return a;
}

u64 parse_u64(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a decimal string");
  const std::string s = j.get<std::string>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("not a decimal: " + s);
  }
  return std::stoull(s);
}

std::vector<u64> parse_list(const Json& j) {
  std::vector<u64> out;
  for (const auto& x : j) out.push_back(parse_u64(x));
  return out;
}

std::string join(const std::vector<u64>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

}  // namespace

std::string to_json(const SearchResult& r) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = to_string(r.job.kind);
  Json job;
  job["p"] = std::to_string(r.job.p);
  job["d"] = std::to_string(r.job.d);
  job["alpha"] = std::to_string(r.job.alpha);
  job["alpha_max"] = std::to_string(r.job.alpha_max);
  job["target"] = strings(r.job.target);
  j["job"] = job;
  j["modulus"] = std::to_string(r.job.p);
  j["verdict"] = r.verdict;
  j["exhausted"] = r.exhausted;
  j["counts"] = {{"examined", std::to_string(r.examined)},
                 {"pruned", std::to_string(r.pruned)},
                 {"primes_scanned", std::to_string(r.primes_scanned)},
                 {"witnesses", std::to_string(r.witnesses.size())}};
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json wj;
    Json sets = Json::array();
    for (const auto& s : w.sets) sets.push_back(strings(s));
    wj["sets"] = sets;
    Json info = Json::object();
    for (const auto& [k, v] : w.info) info[k] = v;
    wj["info"] = info;
    ws.push_back(wj);
  }
  j["witnesses"] = ws;
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

SearchResult search_result_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (j.at("schema") != kSchema) throw std::invalid_argument("unsupported schema");
    SearchResult r;
    r.job.kind = search_kind_from_string(j.at("kind").get<std::string>());
    const Json& job = j.at("job");
    r.job.p = parse_u64(job.at("p"));
    r.job.d = parse_u64(job.at("d"));
    r.job.alpha = parse_u64(job.at("alpha"));
    r.job.alpha_max = parse_u64(job.at("alpha_max"));
    r.job.target = parse_list(job.at("target"));
    if (parse_u64(j.at("modulus")) != r.job.p) throw std::invalid_argument("modulus mismatch");
    r.verdict = j.at("verdict").get<std::string>();
    r.exhausted = j.at("exhausted").get<bool>();
    const Json& c = j.at("counts");
    r.examined = parse_u64(c.at("examined"));
    r.pruned = parse_u64(c.at("pruned"));
    r.primes_scanned = parse_u64(c.at("primes_scanned"));
    for (const auto& wj : j.at("witnesses")) {
      Witness w;
      for (const auto& s : wj.at("sets")) w.sets.push_back(parse_list(s));
      for (const auto& [k, v] : wj.at("info").items()) w.info[k] = v.get<std::string>();
      r.witnesses.push_back(std::move(w));
    }
    if (parse_u64(c.at("witnesses")) != r.witnesses.size()) throw std::invalid_argument("witness count mismatch");
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed result: ") + e.what());
  }
}

std::string to_csv(const SearchResult& r) {
  std::ostringstream os;
  os << "kind,p,d,witness,sets,info\n";
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    const auto& w = r.witnesses[i];
    std::string sets, info;
    for (std::size_t k = 0; k < w.sets.size(); ++k) sets += (k ? "|" : "") + join(w.sets[k], " ");
    for (const auto& [key, v] : w.info) info += (info.empty() ? "" : ";") + key + "=" + v;
    os << to_string(r.job.kind) << ',' << r.job.p << ',' << r.job.d << ',' << i << ",\"" << sets
       << "\",\"" << info << "\"\n";
  }
  return os.str();
}

std::string to_text(const SearchResult& r) {
  std::ostringstream os;
  os << to_string(r.job.kind);
  if (r.job.p) os << " p=" << r.job.p;
  if (r.job.d) os << " d=" << r.job.d;
  if (r.job.alpha) os << " alpha=" << r.job.alpha;
  if (r.job.alpha_max) os << " alpha_max=" << r.job.alpha_max;
  if (!r.job.target.empty()) os << " target={" << join(r.job.target, ",") << "}";
  os << "\nverdict: " << r.verdict << " (" << r.witnesses.size() << " witnesses, " << r.examined
     << " examined, " << r.pruned << " pruned";
  if (r.job.kind == SearchKind::Levson) os << ", " << r.primes_scanned << " primes scanned";
  os << ")\n";
  for (const auto& w : r.witnesses) {
    os << "  ";
    for (std::size_t k = 0; k < w.sets.size(); ++k) os << (k ? " + " : "") << "{" << join(w.sets[k], ",") << "}";
    for (const auto& [key, v] : w.info) os << " " << key << "=" << v;
    os << "\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace mucrit
