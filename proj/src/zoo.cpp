#include "exstat/zoo.hpp"

#include <algorithm>
#include <cctype>

namespace exstat {

std::string family_name(Family f) {
  switch (f) {
    case Family::BOSON: return "boson";
    case Family::FERMION: return "fermion";
    case Family::GENTILE: return "gentile";
    case Family::PARABOSON: return "paraboson";
    case Family::PARAFERMION: return "parafermion";
    case Family::MAXWELL_BOLTZMANN: return "maxwell-boltzmann";
    case Family::JACK_21: return "jack-21";
    case Family::IMMANON_21: return "immanon-21";
    case Family::SEMION_N5: return "semion-n5";
    case Family::CAPPED_DISTINGUISHABLE: return "capped-distinguishable";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  std::string s;
  for (char c : name)
    s += c == '_' ? '-' : static_cast<char>(std::tolower(
                              static_cast<unsigned char>(c)));
  for (Family f :
       {Family::BOSON, Family::FERMION, Family::GENTILE, Family::PARABOSON,
        Family::PARAFERMION, Family::MAXWELL_BOLTZMANN, Family::JACK_21,
        Family::IMMANON_21, Family::SEMION_N5,
        Family::CAPPED_DISTINGUISHABLE})
    if (family_name(f) == s) return f;
  if (s == "mb" || s == "quon") return Family::MAXWELL_BOLTZMANN;
  if (s == "jack") return Family::JACK_21;
  if (s == "immanon") return Family::IMMANON_21;
  if (s == "semion") return Family::SEMION_N5;
  if (s == "capped") return Family::CAPPED_DISTINGUISHABLE;
  throw std::invalid_argument("unknown statistics family \"" + name + "\"");
}

namespace {

int require_q(const FamilyParams& p, const char* what) {
  if (!p.q_or_p || *p.q_or_p < 1)
    throw UnsupportedFamily(std::string("UNSUPPORTED: ") + what +
                            " requires parameter q/p >= 1");
  return *p.q_or_p;
}

ExactScalar multinomial_weight(const Partition& lambda) {
  // N! / prod(lambda_j!)
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lambda.weight()));
  mpz_class den = 1;
  for (int part : lambda.parts) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(part));
    den *= f;
  }
  ExactScalar w(num, den);
  w.canonicalize();
  return w;
}

}  // namespace

StatisticsSpec make_spec(const FamilyParams& p) {
  if (p.n < 1)
    throw std::invalid_argument("make_spec: particle number n must be >= 1");
  PartitionTable table = enumerate_partitions(p.n);
  const int count = table.count();
  StatisticsSpec spec;
  spec.n = p.n;
  spec.coeffs.assign(count, ExactScalar(0));

  switch (p.family) {
    case Family::BOSON:
      spec.label = "boson";
      spec.side = Basis::schur;
      spec.coeffs[0] = 1;  // the fully symmetric irrep, lambda = (n)
      break;

    case Family::FERMION:
      spec.label = "fermion";
      spec.side = Basis::schur;
      spec.coeffs[count - 1] = 1;  // the alternating irrep, lambda = (1^n)
      break;

    case Family::GENTILE: {
      int q = require_q(p, "GENTILE");
      spec.label = "gentile(q=" + std::to_string(q) + ")";
      spec.side = Basis::monomial;
      for (int j = 1; j <= count; ++j)
        if (table.at(j).parts[0] <= q) spec.coeffs[j - 1] = 1;
      break;
    }

    case Family::PARABOSON: {
      int q = require_q(p, "PARABOSON");
      spec.label = "paraboson(p=" + std::to_string(q) + ")";
      spec.side = Basis::schur;
      for (int i = 1; i <= count; ++i)
        if (table.at(i).length() <= q) spec.coeffs[i - 1] = 1;
      break;
    }

    case Family::PARAFERMION: {
      int q = require_q(p, "PARAFERMION");
      spec.label = "parafermion(p=" + std::to_string(q) + ")";
      spec.side = Basis::schur;
      for (int i = 1; i <= count; ++i)
        if (table.at(i).parts[0] <= q) spec.coeffs[i - 1] = 1;
      break;
    }

    case Family::MAXWELL_BOLTZMANN:
      spec.label = "maxwell-boltzmann";
      spec.side = Basis::monomial;
      for (int j = 1; j <= count; ++j)
        spec.coeffs[j - 1] = multinomial_weight(table.at(j));
      break;

    case Family::JACK_21: {
      if (p.n != 3)
        throw UnsupportedFamily(
            "UNSUPPORTED: the Jack interpolation is defined only at n=3");
      if (!p.alpha)
        throw UnsupportedFamily("UNSUPPORTED: JACK_21 requires parameter alpha");
      const ExactScalar& a = *p.alpha;
      spec.label = "jack-21(alpha=" + to_string(a) + ")";
      spec.side = Basis::monomial;
      // Omega over {(3),(2,1),(1,1,1)}: (0, 2+alpha, 6).
      spec.coeffs[1] = ExactScalar(2) + a;
      spec.coeffs[2] = 6;
      break;
    }

    case Family::IMMANON_21:
      if (p.n != 3)
        throw UnsupportedFamily(
            "UNSUPPORTED: the immanon statistics is defined only at n=3");
      spec.label = "immanon-21";
      spec.side = Basis::schur;
      spec.coeffs[1] = 1;  // single copy of the mixed-symmetry irrep (2,1)
      break;

    case Family::SEMION_N5: {
      if (p.n != 5)
        throw UnsupportedFamily(
            "UNSUPPORTED: the semion weight vector is given only at n=5");
      spec.label = "semion";
      spec.side = Basis::monomial;
      // Omega over the 7 partitions of 5, descending order:
      // (5),(4,1),(3,2),(3,1,1),(2,2,1),(2,1,1,1),(1^5).
      spec.coeffs[4] = rat(1, 3);
      spec.coeffs[5] = rat(1, 2);
      spec.coeffs[6] = 1;
      break;
    }

    case Family::CAPPED_DISTINGUISHABLE: {
      int q = require_q(p, "CAPPED_DISTINGUISHABLE");
      if (!p.m_states || *p.m_states < 1)
        throw UnsupportedFamily(
            "UNSUPPORTED: CAPPED_DISTINGUISHABLE requires parameter "
            "m_states >= 1");
      int m = *p.m_states;
      spec.label = "capped-distinguishable(q=" + std::to_string(q) +
                   ",m=" + std::to_string(m) + ")";
      spec.side = Basis::monomial;
      for (int j = 1; j <= count; ++j) {
        const Partition& lambda = table.at(j);
        if (lambda.parts[0] <= q && lambda.length() <= m)
          spec.coeffs[j - 1] = multinomial_weight(lambda);
      }
      break;
    }
  }
  validate(spec);
  return spec;
}

AuditVerdict audit_family(const FamilyParams& p) {
  return classify(make_spec(p));
}

}  // namespace exstat
