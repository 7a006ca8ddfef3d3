#include "staudt/slp.hpp"

#include <cctype>
#include <map>

namespace staudt {

void Slp::validate() const {
  if (root < 0 || root >= (int)nodes.size()) throw StructureError("slp root out of range");
  for (size_t i = 0; i < nodes.size(); ++i) {
    const SlpNode& n = nodes[i];
    switch (n.op) {
      case SlpNode::Op::Var:
        if (n.var < 0 || n.var >= nvars) throw StructureError("slp variable out of range");
        break;
      case SlpNode::Op::One:
      case SlpNode::Op::NegOne:
        break;
      default:
        if (n.a < 0 || n.b < 0 || n.a >= (int)i || n.b >= (int)i)
          throw StructureError("slp operands must precede their node");
    }
  }
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  Slp* slp;
  std::map<long, int> literal_nodes;  // literal value -> node (shared)
  std::map<int, int> var_nodes;

  explicit Parser(const std::string& text, Slp* out) : s(text), slp(out) {}

  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(i));
    ++i;
  }

  int add_node(SlpNode n) {
    slp->nodes.push_back(n);
    return (int)slp->nodes.size() - 1;
  }
  int op_node(SlpNode::Op op, int a, int b) { return add_node({op, a, b, -1}); }

  int var_node(int v) {
    auto it = var_nodes.find(v);
    if (it != var_nodes.end()) return it->second;
    int n = add_node({SlpNode::Op::Var, -1, -1, v});
    var_nodes[v] = n;
    return n;
  }

  // double-and-add chain of +-1 gadget nodes, with node sharing per literal
  int literal_node(long c) {
    if (c == 0) throw ParseError("zero literal rejected; write nothing or sub(x,x) explicitly");
    auto it = literal_nodes.find(c);
    if (it != literal_nodes.end()) return it->second;
    int n;
    if (c == 1) {
      n = add_node({SlpNode::Op::One, -1, -1, -1});
    } else if (c == -1) {
      n = add_node({SlpNode::Op::NegOne, -1, -1, -1});
    } else if (c < 0) {
      n = op_node(SlpNode::Op::Mul, literal_node(-1), literal_node(-c));
    } else {
      int one = literal_node(1);
      int acc = one;
      bool started = false;
      for (int bit = 62; bit >= 0; --bit) {
        if (!started) {
          if ((c >> bit) & 1) started = true, acc = one;
          continue;
        }
        acc = op_node(SlpNode::Op::Add, acc, acc);
        if ((c >> bit) & 1) acc = op_node(SlpNode::Op::Add, acc, one);
      }
      n = acc;
    }
    literal_nodes[c] = n;
    return n;
  }

  long read_int() {
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    if (i == start) throw ParseError("expected integer at position " + std::to_string(start));
    return std::stol(s.substr(start, i - start));
  }

  int factor() {
    char c = peek();
    if (c == '(') {
      ++i;
      int e = expr();
      expect(')');
      return e;
    }
    if (c == '-') {
      ++i;
      skip();
      if (i < s.size() && std::isdigit((unsigned char)s[i])) return literal_node(-read_int());
      return op_node(SlpNode::Op::Mul, literal_node(-1), factor());
    }
    if (c == 'x') {
      ++i;
      long v = read_int();
      if (v < 1) throw ParseError("variables are x1, x2, ...");
      slp->nvars = std::max(slp->nvars, (int)v);
      return var_node((int)v - 1);
    }
    if (std::isdigit((unsigned char)c)) return literal_node(read_int());
    throw ParseError("unexpected character at position " + std::to_string(i));
  }

  int term() {
    int n = factor();
    while (peek() == '*') {
      ++i;
      n = op_node(SlpNode::Op::Mul, n, factor());
    }
    return n;
  }

  int expr() {
    int n = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++i;
        n = op_node(SlpNode::Op::Add, n, term());
      } else if (c == '-') {
        ++i;
        n = op_node(SlpNode::Op::Sub, n, term());
      } else {
        break;
      }
    }
    return n;
  }
};

} // namespace

PolySystem parse_system(const std::string& text) {
  PolySystem sys;
  size_t start = 0;
  std::vector<std::string> eqs;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      std::string piece = text.substr(start, i - start);
      bool blank = true;
      for (char ch : piece)
        if (!std::isspace((unsigned char)ch)) blank = false;
      if (!blank) eqs.push_back(piece);
      start = i + 1;
    }
  }
  for (auto& eq : eqs) {
    size_t epos = eq.find('=');
    if (epos == std::string::npos) throw ParseError("equation missing '= 0': " + eq);
    std::string rhs = eq.substr(epos + 1);
    {
      std::string t;
      for (char ch : rhs)
        if (!std::isspace((unsigned char)ch)) t += ch;
      if (t != "0") throw ParseError("right-hand side must be 0 in: " + eq);
    }
    Slp slp;
    std::string lhs = eq.substr(0, epos);
    Parser p(lhs, &slp);
    slp.root = p.expr();
    p.skip();
    if (p.i != lhs.size())
      throw ParseError("trailing input at position " + std::to_string(p.i) + " in: " + eq);
    sys.slps.push_back(std::move(slp));
  }
  for (auto& s : sys.slps) sys.nvars = std::max(sys.nvars, s.nvars);
  for (auto& s : sys.slps) {
    s.nvars = sys.nvars;
    s.validate();
  }
  return sys;
}

RingElement eval_slp(const Slp& slp, const std::vector<RingElement>& xs) {
  if ((int)xs.size() < slp.nvars) throw StructureError("eval_slp: not enough values");
  RingPtr r = xs.empty() ? ring_q() : xs[0].ring();
  std::vector<RingElement> vals(slp.nodes.size(), RingElement::zero(r));
  for (size_t i = 0; i < slp.nodes.size(); ++i) {
    const SlpNode& n = slp.nodes[i];
    switch (n.op) {
      case SlpNode::Op::Var: vals[i] = xs[n.var]; break;
      case SlpNode::Op::One: vals[i] = RingElement::one(r); break;
      case SlpNode::Op::NegOne: vals[i] = -RingElement::one(r); break;
      case SlpNode::Op::Add: vals[i] = vals[n.a] + vals[n.b]; break;
      case SlpNode::Op::Sub: vals[i] = vals[n.a] - vals[n.b]; break;
      case SlpNode::Op::Mul: vals[i] = vals[n.a] * vals[n.b]; break;
    }
  }
  return vals[slp.root];
}

Poly expand_slp(const Slp& slp) {
  int nv = slp.nvars;
  std::vector<Poly> vals(slp.nodes.size(), Poly(nv));
  for (size_t i = 0; i < slp.nodes.size(); ++i) {
    const SlpNode& n = slp.nodes[i];
    switch (n.op) {
      case SlpNode::Op::Var: vals[i] = Poly::variable(nv, n.var); break;
      case SlpNode::Op::One: vals[i] = Poly::constant(nv, 1); break;
      case SlpNode::Op::NegOne: vals[i] = Poly::constant(nv, -1); break;
      case SlpNode::Op::Add: vals[i] = vals[n.a] + vals[n.b]; break;
      case SlpNode::Op::Sub: vals[i] = vals[n.a] - vals[n.b]; break;
      case SlpNode::Op::Mul: vals[i] = vals[n.a] * vals[n.b]; break;
    }
  }
  return vals[slp.root];
}

std::optional<std::vector<long>> is_weighted_homogeneous(const std::vector<Poly>& polys,
                                                         const std::vector<int>& weights) {
  for (int w : weights)
    if (w < 1) throw StructureError("weights must be positive");
  std::vector<long> us;
  for (auto& f : polys) {
    if ((int)weights.size() < f.nvars())
      throw StructureError("missing weights for some variables");
    std::optional<long> u;
    for (auto& [e, c] : f.terms()) {
      long wsum = 0;
      for (size_t i = 0; i < e.size(); ++i) wsum += (long)e[i] * weights[i];
      if (!u) u = wsum;
      else if (*u != wsum) return std::nullopt;
    }
    us.push_back(u.value_or(0));
  }
  return us;
}

} // namespace staudt
