#ifndef FBMREC_FFT_HPP
#define FBMREC_FFT_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace fbmrec {

// Radix-2 complex FFT for a fixed power-of-two size. Twiddle factors and the
// bit-reversal permutation are precomputed once, so a plan can be shared
// across many transforms (and across threads; all methods are const).
//
// Conventions: forward uses exp(-2*pi*i*jk/m), inverse uses exp(+2*pi*i*jk/m),
// both unnormalized.
class Fft {
  public:
    explicit Fft(std::size_t size);

    void forward(std::complex<double>* data) const { transform(data, false); }
    void inverse(std::complex<double>* data) const { transform(data, true); }

    std::size_t size() const { return size_; }

  private:
    void transform(std::complex<double>* data, bool conjugate_twiddles) const;

    std::size_t size_;
    std::vector<std::complex<double>> twiddles_;  // exp(-2*pi*i*k/size), k < size/2
    std::vector<std::uint32_t> bit_reversed_;
};

}  // namespace fbmrec

#endif
