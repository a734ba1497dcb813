#pragma once

#include <optional>

#include "mdep/arith.hpp"
#include "mdep/interval.hpp"

namespace mdep {

struct FieldInvariants {
    int d = 1;
    int r1 = 1;
    int r2 = 0;
    int r = 0;
    Z disc{1};
    Z h{1};
    RInterval reg = RInterval::from_long(1, 64);
    int w = 2;
    RInterval zeta2 = RInterval::from_long(0, 64);
    std::optional<long> quad_m;
};

FieldInvariants invariants_rationals(mpfr_prec_t prec = 192);
FieldInvariants invariants_quadratic(long m, mpfr_prec_t prec = 192);

// Class number of the imaginary quadratic order of fundamental discriminant
// D < 0, by counting reduced primitive forms.
long class_number_forms(const Z& D);
// Narrow class number of fundamental discriminant D > 0, by counting cycles
// of reduced primitive indefinite forms (equals h or 2h by the unit norm).
long class_number_form_cycles(const Z& D);

// Certified Riemann zeta at integer s >= 2.
RInterval zeta_i(unsigned long s, mpfr_prec_t prec = 192);
// Certified Dirichlet L(s, chi_D) for the Kronecker character of the
// fundamental discriminant D; s = 1 requires D > 0.
RInterval dirichlet_l(int s, const Z& D, mpfr_prec_t prec = 192);

RInterval C1(const FieldInvariants& k, mpfr_prec_t prec = 192);
RInterval C2(const FieldInvariants& k, mpfr_prec_t prec = 192);
RInterval C3(int n, const FieldInvariants& k, mpfr_prec_t prec = 192);
RInterval C4(int n, const FieldInvariants& k, mpfr_prec_t prec = 192);
Q C5(int d);
RInterval C6(int d, mpfr_prec_t prec = 192);
Q C7(int n, int d);
RInterval C8(int n, int d, mpfr_prec_t prec = 192);

// Number of roots of unity whose minimal polynomial has degree d.
long w0(int d);

struct ErrorExponents {
    int sigma;
    int rho;
    int vartheta;
};
ErrorExponents error_exponents(int d);

// Exact count of units of the ring of integers of Q(sqrt m) with Weil
// height <= height_bound.
Z unit_count_quadratic(long m, const Q& height_bound);

}  // namespace mdep
