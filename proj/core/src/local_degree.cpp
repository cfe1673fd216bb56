#include "gwbez/local_degree.hpp"

namespace gwbez {

std::string method_name(DegreeMethod m) {
  switch (m) {
    case DegreeMethod::Transverse: return "transverse-jacobian";
    case DegreeMethod::Series: return "series";
    case DegreeMethod::ClosedForm: return "closed-form";
  }
  return "?";
}

LocalDegreeResult local_degree_transverse(const std::vector<Poly<Rat>>& fs,
                                          const ExtFieldPtr<Rat>& E,
                                          const std::vector<ExtElem<Rat>>& at) {
  LocalDegreeResult r;
  r.degree = GWElement::make_q(transverse_degree_diag(fs, E, at));
  r.multiplicity = E->degree();
  r.method = DegreeMethod::Transverse;
  return r;
}

LocalDegreeResult local_degree_transverse(const std::vector<Poly<Fp>>& fs,
                                          const ExtFieldPtr<Fp>& E,
                                          const std::vector<ExtElem<Fp>>& at) {
  LocalDegreeResult r;
  std::vector<Fp> diag = transverse_degree_diag(fs, E, at);
  long p = E->base_sample().modulus();
  r.degree = GWElement::make_fp(p, std::move(diag));
  r.multiplicity = E->degree();
  r.method = DegreeMethod::Transverse;
  return r;
}

LocalDegreeResult local_degree_series(const Poly<Rat>& f, const Poly<Rat>& g) {
  SeriesDegree<Rat> sd = series_degree(f, g);
  LocalDegreeResult r;
  if (sd.n % 2 == 1) r.unit = elem_str(sd.diag.back());
  r.degree = GWElement::make_q(std::move(sd.diag));
  r.multiplicity = sd.n;
  r.method = DegreeMethod::Series;
  return r;
}

LocalDegreeResult local_degree_series(const Poly<Fp>& f, const Poly<Fp>& g) {
  SeriesDegree<Fp> sd = series_degree(f, g);
  long p = f.terms().begin()->second.modulus();
  LocalDegreeResult r;
  if (sd.n % 2 == 1) r.unit = elem_str(sd.diag.back());
  r.degree = GWElement::make_fp(p, std::move(sd.diag));
  r.multiplicity = sd.n;
  r.method = DegreeMethod::Series;
  r.char_warning = true;
  return r;
}

LocalDegreeResult local_degree_monomial(const Rat& a, long d) {
  LocalDegreeResult r;
  r.degree = GWElement::make_q(monomial_degree_diag(a, d));
  r.multiplicity = d;
  if (d % 2 == 1) r.unit = elem_str(a);
  r.method = DegreeMethod::ClosedForm;
  return r;
}

LocalDegreeResult local_degree_monomial(const Fp& a, long d) {
  LocalDegreeResult r;
  r.degree = GWElement::make_fp(a.modulus(), monomial_degree_diag(a, d));
  r.multiplicity = d;
  if (d % 2 == 1) r.unit = elem_str(a);
  r.method = DegreeMethod::ClosedForm;
  return r;
}

}  // namespace gwbez
