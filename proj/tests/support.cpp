#include "support.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace paqa::testing {

std::string fixture_path(std::string_view name) {
  return std::string(PAQA_FIXTURE_DIR) + "/" + std::string(name);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

SpecDocument load_fixture(std::string_view name) {
  return parse_spec(read_file(fixture_path(std::string(name) + ".paqa")));
}

SpecDocument parse(std::string_view text) { return parse_spec(text); }

Word word(const Quiver& q, std::string_view names) {
  Word w;
  std::istringstream in{std::string(names)};
  for (std::string n; in >> n;) w.push_back(q.arrow_id(n));
  return w;
}

std::string random_spec_text(std::mt19937& rng) {
  auto coin = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  const int nv = pick(1, 2);
  const int loops = pick(1, 4);
  const int links = nv == 2 ? pick(0, 2) : 0;
  struct A {
    std::string name;
    int o, t;
  };
  std::vector<A> arrows;
  const char* loop_names[] = {"a", "b", "c", "d"};
  const char* link_names[] = {"e", "f"};
  for (int i = 0; i < loops; ++i) {
    int v = nv == 2 ? pick(0, 1) : 0;
    arrows.push_back({loop_names[i], v, v});
  }
  for (int i = 0; i < links; ++i) {
    int o = pick(0, 1);
    arrows.push_back({link_names[i], o, 1 - o});
  }

  const char* vname[] = {"x", "y"};
  std::string s = nv == 2 ? "vertices: x, y\n" : "vertices: x\n";
  s += "arrows: ";
  for (std::size_t i = 0; i < arrows.size(); ++i)
    s += (i ? ", " : "") + arrows[i].name + ": " + vname[arrows[i].o] + "->" + vname[arrows[i].t];
  s += "\n";
  s += coin(0.5) ? "ideal commutative\n" : "ideal anticommutative\n";

  std::vector<std::string> zero, rel;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    for (std::size_t j = 0; j < arrows.size(); ++j) {
      if (arrows[i].t != arrows[j].o) continue;
      const bool loops_pair = i != j && arrows[i].o == arrows[i].t && arrows[j].o == arrows[j].t;
      if (loops_pair && i < j && coin(0.45)) rel.push_back(arrows[i].name + "*" + arrows[j].name);
      double p = i == j ? 0.2 : 0.35;
      if (coin(p)) zero.push_back(arrows[i].name + "*" + arrows[j].name);
    }
  }
  auto list = [](const std::vector<std::string>& v) {
    std::string r;
    for (std::size_t i = 0; i < v.size(); ++i) r += (i ? ", " : "") + v[i];
    return r;
  };
  if (!zero.empty()) s += "zero: " + list(zero) + "\n";
  if (!rel.empty()) s += (s.find("anticommutative") != std::string::npos ? "anti: " : "comm: ") +
                         list(rel) + "\n";
  double c = std::uniform_real_distribution<double>(0, 1)(rng);
  if (c < 0.1) s += "char: 2\n";
  else if (c < 0.25) s += "char: 3\n";
  return s;
}

bool oracle_is_central(TruncatedAlgebra& alg, const Word& z, bool graded) {
  const auto& q = alg.spec().quiver();
  const unsigned p = alg.characteristic();
  LinComb zc = alg.reduce(z);
  const Scalar twist(graded && z.size() % 2 == 1 ? -1 : 1, p);
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    LinComb x{{Word{a}, Scalar(1, p)}};
    LinComb left = alg.multiply(x, zc);
    LinComb right = alg.multiply(zc, x);
    for (auto& [w, c] : right) {
      auto [it, inserted] = left.emplace(w, -(twist * c));
      if (!inserted) {
        it->second = it->second - twist * c;
        if (it->second.is_zero()) left.erase(it);
      }
    }
    if (!left.empty()) return false;
  }
  return true;
}

}  // namespace paqa::testing
