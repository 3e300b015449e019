#include "cltlab/groupspec.hpp"

#include <cctype>
#include <vector>

#include "cltlab/constructors.hpp"
#include "cltlab/errors.hpp"
#include "cltlab/gf.hpp"

namespace cltlab {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& str) : s(str) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw InvalidArgument("group spec: " + msg + " at position " + std::to_string(pos) +
                          " in '" + s + "'");
  }

  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool lookahead(const std::string& word) const {
    return s.compare(pos, word.size(), word) == 0;
  }

  bool eat_word(const std::string& word) {
    if (lookahead(word)) {
      pos += word.size();
      return true;
    }
    return false;
  }

  int integer() {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stoi(s.substr(start, pos - start));
  }

  gf::Matrix matrix(int q) {
    expect('[');
    std::vector<std::vector<int>> rows;
    do {
      std::vector<int> row;
      do {
        row.push_back(integer());
      } while (eat(','));
      rows.push_back(std::move(row));
    } while (eat(';'));
    expect(']');
    int dim = static_cast<int>(rows.size());
    gf::Matrix m(dim, q);
    for (int r = 0; r < dim; ++r) {
      if (static_cast<int>(rows[r].size()) != dim) fail("matrix must be square");
      for (int c = 0; c < dim; ++c) m.at(r, c) = ((rows[r][c] % q) + q) % q;
    }
    return m;
  }

  // Parses and builds an sdp ACTION for the given base spec head.
  Automorphism action(const std::string& base_head, const std::vector<int>& base_params,
                      const GroupPtr& base) {
    if (eat_word("glorder:")) {
      int p = integer();
      if (base_head == "elemab") {
        int q = base_params[0], k = base_params[1];
        return matrix_action_on_elemab(base, q, k, gf::find_gl_element_of_order(k, q, p));
      }
      if (base_head == "cyclic" && gf::is_prime(base_params[0])) {
        int q = base_params[0];
        return matrix_action_on_cyclic(base, q, gf::find_gl_element_of_order(1, q, p));
      }
      fail("glorder action needs an elemab or prime cyclic base");
    }
    if (eat_word("slorder:")) {
      int p = integer();
      if (base_head != "heis") fail("slorder action needs a heis base");
      HeisenbergGroup h = heisenberg(base_params[0]);
      return sl2_action_on_heisenberg(h, base_params[0], gf::find_sl2_element_of_order(base_params[0], p));
    }
    if (eat_word("matrix:")) {
      if (base_head == "elemab") {
        int q = base_params[0], k = base_params[1];
        gf::Matrix m = matrix(q);
        if (m.dim != k) fail("matrix dimension must match elemab rank");
        return matrix_action_on_elemab(base, q, k, m);
      }
      if (base_head == "cyclic" && gf::is_prime(base_params[0])) {
        int q = base_params[0];
        gf::Matrix m = matrix(q);
        if (m.dim != 1) fail("matrix action on a cyclic base must be 1x1");
        return matrix_action_on_cyclic(base, q, m);
      }
      if (base_head == "heis") {
        int q = base_params[0];
        HeisenbergGroup h = heisenberg(q);
        gf::Matrix m = matrix(q);
        if (m.dim != 2) fail("matrix action on a heis base must be 2x2");
        return sl2_action_on_heisenberg(h, q, m);
      }
      fail("matrix action needs an elemab, prime cyclic, or heis base");
    }
    if (eat_word("aut:")) {
      int k = integer();
      auto autos = enumerate_automorphisms(*base);
      if (k < 0 || k >= static_cast<int>(autos.size()))
        fail("aut index out of range (|Aut| = " + std::to_string(autos.size()) + ")");
      return automorphism_from_image(base, autos[k]);
    }
    fail("expected glorder:, slorder:, matrix:, or aut:");
  }

  struct Parsed {
    GroupPtr group;
    std::string head;
    std::vector<int> params;
  };

  Parsed spec() {
    if (eat_word("cyclic:")) {
      int n = integer();
      return {cyclic(n), "cyclic", {n}};
    }
    if (eat_word("elemab:")) {
      int q = integer();
      expect(',');
      int k = integer();
      return {elementary_abelian(q, k), "elemab", {q, k}};
    }
    if (eat_word("heis:")) {
      int q = integer();
      return {heisenberg(q).group, "heis", {q}};
    }
    if (eat_word("mod:")) {
      int q = integer();
      return {modular_group(q).group, "mod", {q}};
    }
    if (eat_word("q8")) return {quaternion8(), "q8", {}};
    if (eat_word("sl23")) return {sl2_3(), "sl23", {}};
    if (eat_word("s4")) return {symmetric4(), "s4", {}};
    if (eat_word("dih:")) {
      int n = integer();
      return {dihedral(n), "dih", {n}};
    }
    if (eat_word("dic:")) {
      int n = integer();
      return {dicyclic(n), "dic", {n}};
    }
    if (eat_word("zq3xzp:")) {
      int p = integer();
      expect(',');
      int q = integer();
      return {zq3_semi_zp(p, q), "zq3xzp", {p, q}};
    }
    if (eat_word("eq3xzp:")) {
      int p = integer();
      expect(',');
      int q = integer();
      return {eq3_semi_zp(p, q), "eq3xzp", {p, q}};
    }
    if (eat_word("dp(")) {
      Parsed a = spec();
      expect(',');
      Parsed b = spec();
      expect(')');
      return {std::make_shared<const FiniteGroup>(direct_product(*a.group, *b.group)), "dp", {}};
    }
    if (eat_word("sdp(")) {
      size_t action_start;
      Parsed base = spec();
      expect(',');
      int m = integer();
      expect(',');
      action_start = pos;
      Automorphism alpha = action(base.head, base.params, base.group);
      std::string action_text = s.substr(action_start, pos - action_start);
      expect(')');
      std::string tag =
          "sdp(" + base.group->spec_tag + "," + std::to_string(m) + "," + action_text + ")";
      return {std::make_shared<const FiniteGroup>(semidirect_product(base.group, m, alpha, tag)),
              "sdp", {}};
    }
    fail("unknown constructor");
  }
};

}  // namespace

GroupPtr build_group_spec(const std::string& spec) {
  Parser parser(spec);
  Parser::Parsed result = parser.spec();
  if (parser.pos != spec.size()) parser.fail("trailing input");
  return result.group;
}

}  // namespace cltlab
