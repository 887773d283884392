#pragma once

#include "swcwt/swsh.hpp"
#include "swcwt/wavelet.hpp"

/// Serial, node-by-node versions of the transform kernels, built on sy_eval
/// and wigner_D. Slow; kept as references for the parallel kernels in tests
/// and benchmarks.
namespace swcwt::reference {

GridField synthesize(const SpinField& c, const SphereGrid& grid);
SpinField analyze(const GridField& f, int lmax);
WaveletCoefficients cwt_forward(const SpinField& f, const WaveletFamily& family, const ScaleGrid& scales,
                                const SO3Grid& rotations);
SpinField cwt_inverse(const WaveletCoefficients& w, const WaveletFamily& family, int lmax);

}  // namespace swcwt::reference
