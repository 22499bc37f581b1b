#include "wiser/report.hpp"

#include <cmath>

#include "wiser/builtin.hpp"
#include "wiser/update.hpp"

namespace wiser {

namespace {

class Lines {
 public:
  void value(const std::string& name, const Rational& r) {
    out_ += name + " = " + to_string(r) + "\n";
    out_ += name + " ~ " + to_decimal(r) + "\n";
  }

  void value(const std::string& name, double x) { out_ += name + " ~ " + to_decimal(x) + "\n"; }

  template <class T>
  void dist(const std::string& name, const Dist<T>& d) {
    if constexpr (std::is_same_v<T, Rational>) out_ += name + " = " + ket(d) + "\n";
    std::string dec;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i) dec += " + ";
      dec += to_decimal(d(i)) + "|" + d.space().label(i) + ">";
    }
    out_ += name + " ~ " + dec + "\n";
  }

  std::string str() const { return out_; }

 private:
  std::string out_;
};

}  // namespace

std::string medical_report() {
  const Medical& m = medical();
  const Evidence<Rational> psi = m.evidence(2, 1);
  Lines out;
  out.dist("prior", m.prior);
  out.value("predicted_positive", validity(m.prior, m.pt));
  out.value("predicted_negative", validity(m.prior, m.nt));
  out.dist("predicted_test", push(m.channel, m.prior));
  out.value("jeffrey_prior_validity", jeffrey_validity(m.prior, psi));
  out.value("pearl_prior_validity", pearl_validity(m.prior, psi));
  out.dist("posterior_positive", bayes_update(m.prior, m.pt));
  out.dist("posterior_negative", bayes_update(m.prior, m.nt));

  const Dist<Rational> wj = jeffrey_update(m.prior, psi);
  const Dist<Rational> wp = pearl_update(m.prior, psi);
  out.dist("jeffrey_posterior", wj);
  out.dist("pearl_posterior", wp);
  out.value("jeffrey_posterior_jeffrey_validity", jeffrey_validity(wj, psi));
  out.value("pearl_posterior_pearl_validity", pearl_validity(wp, psi));
  out.value("pearl_posterior_jeffrey_validity", jeffrey_validity(wp, psi));
  out.value("jeffrey_posterior_pearl_validity", pearl_validity(wj, psi));
  out.value("iterated_pearl", iterated_pearl_validity(m.prior, {m.pt, m.pt, m.nt}));

  const Multiset phi = m.outcomes(1, 1);
  const Dist<double> vfe = vfe_update(m.prior, triple_pull(m.channel, phi));
  out.dist("vfe_posterior_1_1", vfe);
  const double before = kl_divergence(flrn(phi), push(m.channel, m.prior));
  const double after = kl_divergence(flrn(phi), push(m.channel.cast<double>(), vfe));
  out.value("vfe_prior_divergence_1_1", before);
  out.value("vfe_prior_divergence_1_1_bits", before / std::log(2.0));
  out.value("vfe_posterior_divergence_1_1", after);
  out.value("vfe_posterior_divergence_1_1_bits", after / std::log(2.0));
  return out.str();
}

}  // namespace wiser
