#pragma once

#include "core/functions.hpp"
#include "core/hermitian.hpp"

namespace opconv {

// |c - 1/2| at or below this routes the lower bound through the
// second-derivative midpoint form; the (1-2c)^-2 factor amplifies round-off
// closer to the midpoint.
inline constexpr double kMidpointBand = 1e-3;

// One evaluation instance: positive definite A, B of equal dimension, a
// mixing weight strictly inside (0,1), and the scalar function under test.
struct ConvexityInstance {
  ConvexityInstance(HermitianMatrix a_in, HermitianMatrix b_in, double c_in,
                    FunctionDescriptor f_in);

  HermitianMatrix a;
  HermitianMatrix b;
  double c;
  FunctionDescriptor f;
};

struct MixtureOperator {
  HermitianMatrix value;
};

// weight * A + (1 - weight) * B for weight in [0,1].
MixtureOperator mixture(const ConvexityInstance& inst, double weight);

// c f(A) + (1-c) f(B) - f(cA + (1-c)B); PSD for operator convex f.
HermitianMatrix modulus_of_convexity(const ConvexityInstance& inst);

// f(A) - f(B) - Df(B)[A-B]; PSD for operator convex f, zero at A = B.
HermitianMatrix bregman_divergence(const FunctionDescriptor& f,
                                   const HermitianMatrix& a,
                                   const HermitianMatrix& b);

// (B+s)^-1 (A-B) (A+s)^-1 (A-B) (B+s)^-1: the Bregman divergence of the
// resolvent x -> 1/(s+x) in closed form.
HermitianMatrix bregman_resolvent_closed_form(double s, const HermitianMatrix& a,
                                              const HermitianMatrix& b);

// The divergence lower bound on the modulus of convexity:
//   c(1-c) D_f(M(1-c), M(c)) / (1-2c)^2          away from the midpoint,
//   (1/8) d^2/dx^2 f(M(1/2) + x(A-B)) |_{x=0}    inside the midpoint band.
HermitianMatrix theorem1_rhs(const ConvexityInstance& inst);

// modulus_of_convexity - theorem1_rhs; PSD whenever f is operator convex.
HermitianMatrix theorem1_gap(const ConvexityInstance& inst);

// (1/2)(A^-1 + B^-1) - 2(A+B)^-1
//   - 2 (A+B)^-1 (A-B) (A+B)^-1 (A-B) (A+B)^-1;
// PSD for all positive definite A, B (sharpened arithmetic-harmonic bound).
HermitianMatrix strengthened_ah_gap(const HermitianMatrix& a,
                                    const HermitianMatrix& b);

// Block dilation carrying weighted convexity back to the midpoint:
// W has blocks [sqrt(c) I, -sqrt(1-c) I; sqrt(1-c) I, sqrt(c) I],
// T = diag(A, B), T1 = W T W^dagger, T2 = W^dagger T W. Then
// (T1+T2)/2 = diag(cA+(1-c)B, cB+(1-c)A) and (T1-T2)/2 has zero diagonal
// blocks and off-diagonal blocks sqrt(c(1-c))(A-B).
struct DilationOperators {
  ComplexMatrix w;    // 2d x 2d unitary
  HermitianMatrix t;  // diag(A, B)
  HermitianMatrix t1;
  HermitianMatrix t2;
};

DilationOperators build_dilation(const HermitianMatrix& a, const HermitianMatrix& b,
                                 double c);

// Applies the midpoint bound to (T1, T2) and certifies that the upper-left
// block stays below the directly computed modulus of convexity.
PsdVerdict midpoint_from_dilation_check(const HermitianMatrix& a,
                                        const HermitianMatrix& b, double c,
                                        const FunctionDescriptor& f,
                                        double tol_scale = 1e-8);
PsdVerdict midpoint_from_dilation_check(const HermitianMatrix& a,
                                        const HermitianMatrix& b, double c);

}  // namespace opconv
