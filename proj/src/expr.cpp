#include "wiser/expr.hpp"

#include <cctype>
#include <functional>
#include <map>

#include "wiser/update.hpp"

namespace wiser {

namespace {

using R = Rational;

struct Arg {
  Value value;
  std::size_t col;
};

[[noreturn]] void type_error(const Arg& a, const std::string& expected) {
  throw ParseError(1, a.col, "expected " + expected);
}

const Dist<R>& exact_dist(const Arg& a) {
  if (const auto* d = std::get_if<Dist<R>>(&a.value)) return *d;
  type_error(a, "an exact distribution");
}

Dist<double> float_dist(const Arg& a) {
  if (const auto* d = std::get_if<Dist<R>>(&a.value)) return d->cast<double>();
  if (const auto* d = std::get_if<Dist<double>>(&a.value)) return *d;
  type_error(a, "a distribution");
}

const Factor<R>& factor(const Arg& a) {
  if (const auto* f = std::get_if<Factor<R>>(&a.value)) return *f;
  type_error(a, "a factor");
}

const Multiset& multiset(const Arg& a) {
  if (const auto* m = std::get_if<Multiset>(&a.value)) return *m;
  type_error(a, "a multiset");
}

const Channel<R>& channel(const Arg& a) {
  if (const auto* c = std::get_if<Channel<R>>(&a.value)) return *c;
  type_error(a, "a channel");
}

Evidence<R> evidence(const Arg& a) {
  if (const auto* e = std::get_if<Evidence<R>>(&a.value)) return *e;
  if (const auto* m = std::get_if<Multiset>(&a.value)) return point_evidence(*m);
  if (const auto* f = std::get_if<Factor<R>>(&a.value)) return Evidence<R>(f->space(), {{*f, 1}});
  type_error(a, "evidence, a multiset or a factor");
}

std::uint64_t natural(const Arg& a) {
  if (const auto* s = std::get_if<Scalar>(&a.value))
    if (s->exact() && s->rational() >= 0 && boost::multiprecision::denominator(s->rational()) == 1)
      return static_cast<std::uint64_t>(boost::multiprecision::numerator(s->rational()));
  type_error(a, "a natural number");
}

using Op = std::function<Value(const std::vector<Arg>&)>;

struct OpSpec {
  std::size_t arity;
  Op run;
};

const std::map<std::string, OpSpec, std::less<>>& ops() {
  static const std::map<std::string, OpSpec, std::less<>> table{
      {"validity", {2, [](const auto& a) -> Value {
                      if (std::holds_alternative<Dist<double>>(a[0].value))
                        return Scalar(validity(float_dist(a[0]), factor(a[1]).template cast<double>()));
                      return Scalar(validity(exact_dist(a[0]), factor(a[1])));
                    }}},
      {"jeffrey_validity", {2, [](const auto& a) -> Value { return Scalar(jeffrey_validity(exact_dist(a[0]), evidence(a[1]))); }}},
      {"pearl_validity", {2, [](const auto& a) -> Value { return Scalar(pearl_validity(exact_dist(a[0]), evidence(a[1]))); }}},
      {"bayes_update", {2, [](const auto& a) -> Value { return bayes_update(exact_dist(a[0]), factor(a[1])); }}},
      {"jeffrey_update", {2, [](const auto& a) -> Value { return jeffrey_update(exact_dist(a[0]), evidence(a[1])); }}},
      {"pearl_update", {2, [](const auto& a) -> Value { return pearl_update(exact_dist(a[0]), evidence(a[1])); }}},
      {"vfe_update", {2, [](const auto& a) -> Value { return vfe_update(exact_dist(a[0]), evidence(a[1])); }}},
      {"flrn", {1, [](const auto& a) -> Value { return flrn(multiset(a[0])); }}},
      {"coefm", {1, [](const auto& a) -> Value {
                   if (const auto* m = std::get_if<Multiset>(&a[0].value)) return Scalar(R(coefm(*m)));
                   return Scalar(R(coefm(evidence(a[0]))));
                 }}},
      {"push", {2, [](const auto& a) -> Value {
                  if (std::holds_alternative<Dist<double>>(a[1].value))
                    return push(channel(a[0]).template cast<double>(), float_dist(a[1]));
                  return push(channel(a[0]), exact_dist(a[1]));
                }}},
      {"pull", {2, [](const auto& a) -> Value { return pull(channel(a[0]), factor(a[1])); }}},
      {"triple_pull", {2, [](const auto& a) -> Value { return triple_pull(channel(a[0]), evidence(a[1])); }}},
      {"dagger", {2, [](const auto& a) -> Value { return dagger(channel(a[0]), exact_dist(a[1])); }}},
      {"kl", {2, [](const auto& a) -> Value {
                if (std::holds_alternative<Dist<R>>(a[0].value) && std::holds_alternative<Dist<R>>(a[1].value))
                  return Scalar(kl_divergence(exact_dist(a[0]), exact_dist(a[1])));
                return Scalar(kl_divergence(float_dist(a[0]), float_dist(a[1])));
              }}},
      {"and_conj", {1, [](const auto& a) -> Value { return and_conj(evidence(a[0])); }}},
      {"conj", {2, [](const auto& a) -> Value { return conj(factor(a[0]), factor(a[1])); }}},
      {"ortho", {1, [](const auto& a) -> Value { return ortho(factor(a[0])); }}},
      {"match", {1, [](const auto& a) -> Value { return std::string(to_string(match_status(evidence(a[0])))); }}},
      {"multinomial", {2, [](const auto& a) -> Value { return multinomial(natural(a[0]), exact_dist(a[1])); }}},
      {"covariance", {3, [](const auto& a) -> Value { return Scalar(covariance(exact_dist(a[0]), factor(a[1]), factor(a[2]))); }}},
      {"tensor", {2, [](const auto& a) -> Value { return tensor(exact_dist(a[0]), exact_dist(a[1])); }}},
  };
  return table;
}

Value lookup(const Model& m, std::string_view id, std::size_t col) {
  const auto k = m.kind_of(id);
  if (!k) throw ParseError(1, col, "unknown identifier '" + std::string(id) + "'");
  switch (*k) {
    case EntityKind::Space: throw ParseError(1, col, "'" + std::string(id) + "' is a space, not a value");
    case EntityKind::Distribution: return m.distribution(id);
    case EntityKind::Factor: return m.factor(id);
    case EntityKind::Multiset: return m.multiset(id);
    case EntityKind::Evidence: return m.evidence(id);
    case EntityKind::Channel: return m.channel(id);
  }
  return Scalar();
}

class Parser {
 public:
  Parser(const Model& m, std::string_view text) : m_(m), s_(text) {}

  Value run() {
    Arg v = expr();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return std::move(v.value);
  }

 private:
  [[noreturn]] void error(const std::string& what) const { throw ParseError(1, pos_ + 1, what); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  Arg expr() {
    skip_ws();
    const std::size_t col = pos_ + 1;
    if (pos_ == s_.size()) error("expected an expression");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/' || s_[pos_] == '.'))
        ++pos_;
      try {
        return {Scalar(parse_rational(s_.substr(start, pos_ - start))), col};
      } catch (const ParseError& e) {
        throw ParseError(1, col, e.message());
      }
    }
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) error("unexpected '" + std::string(1, c) + "'");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    const std::string_view name = s_.substr(start, pos_ - start);
    skip_ws();
    if (pos_ == s_.size() || s_[pos_] != '(') return {lookup(m_, name, col), col};

    const auto it = ops().find(name);
    if (it == ops().end()) throw ParseError(1, col, "unknown operation '" + std::string(name) + "'");
    ++pos_;
    std::vector<Arg> args;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ')') {
      ++pos_;
    } else {
      while (true) {
        args.push_back(expr());
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < s_.size() && s_[pos_] == ')') {
          ++pos_;
          break;
        }
        error("expected ',' or ')'");
      }
    }
    if (args.size() != it->second.arity)
      throw ParseError(1, col, std::string(name) + " takes " + std::to_string(it->second.arity) + " argument(s), got " +
                                   std::to_string(args.size()));
    return {it->second.run(args), col};
  }

  const Model& m_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Value evaluate(const Model& model, std::string_view expr) { return Parser(model, expr).run(); }

std::vector<std::string> operation_names() {
  std::vector<std::string> out;
  for (const auto& [name, spec] : ops()) out.push_back(name);
  return out;
}

std::string render(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Scalar>) {
          return x.str();
        } else if constexpr (std::is_same_v<X, Dist<R>> || std::is_same_v<X, Dist<double>>) {
          return ket(x);
        } else if constexpr (std::is_same_v<X, Factor<R>>) {
          return table_text(x);
        } else if constexpr (std::is_same_v<X, Multiset>) {
          return x.ket();
        } else if constexpr (std::is_same_v<X, Evidence<R>>) {
          std::string out;
          for (std::size_t k = 0; k < x.distinct(); ++k) {
            if (k) out += " + ";
            out += std::to_string(x.counts()[k]) + "|" + table_text(x.factors()[k]) + ">";
          }
          return out.empty() ? "0" : out;
        } else if constexpr (std::is_same_v<X, Channel<R>>) {
          std::string out;
          for (std::size_t i = 0; i < x.dom().size(); ++i) {
            if (i) out += "; ";
            out += x.dom().label(i) + " -> " + ket(x.row(i));
          }
          return out;
        } else {
          return x;
        }
      },
      v);
}

}  // namespace wiser
