#include <stdexcept>

#include "dp2/scroll/scroll.hpp"

namespace dp2 {

std::string to_string(MembershipReport::Status s) {
  switch (s) {
    case MembershipReport::Status::accept: return "accept";
    case MembershipReport::Status::warn: return "warn";
    case MembershipReport::Status::reject: return "reject";
  }
  return "?";
}

MembershipReport validate_membership(const MultiPoly& p, const WeightMatrix& w, const Bidegree& expected) {
  for (const auto& v : p.vars())
    if (w.column(v) < 0) throw std::invalid_argument("polynomial variable '" + v + "' is not a column of the scroll");
  MembershipReport rep;
  DegreeResult d = weighted_degree(p, w.grading());
  if (d.is_zero()) {
    rep.messages.push_back("equation is the zero polynomial");
    return rep;
  }
  rep.degree = d.degree;
  if (!d.homogeneous()) {
    rep.offending = d.offending;
    rep.messages.push_back("inhomogeneous: most terms have bidegree " + d.degree.str() + ", expected " +
                           expected.str());
    for (std::size_t i = 0; i < d.offending.size(); ++i)
      rep.messages.push_back("term " + d.offending[i] + " has bidegree " + d.offending_degrees[i].str());
    return rep;
  }
  if (!(d.degree == expected)) {
    rep.messages.push_back("bidegree " + d.degree.str() + " differs from expected " + expected.str());
    return rep;
  }
  rep.status = MembershipReport::Status::accept;
  int iw = p.var_index("w");
  int cw = w.column("w");
  if (iw >= 0 && cw >= 0 && expected.fiber == 2 * w.fiber()[cw] && p.degree_in(static_cast<std::size_t>(iw)) < 2) {
    rep.status = MembershipReport::Status::warn;
    rep.messages.push_back("f = 0: not a del Pezzo fibration of this shape");
  }
  return rep;
}

}  // namespace dp2
