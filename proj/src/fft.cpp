#include "fbmrec/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace fbmrec {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Fft::Fft(std::size_t size) : size_(size) {
    if (size == 0 || (size & (size - 1)) != 0) {
        throw std::invalid_argument("FFT size must be a power of two");
    }
    int log2_size = 0;
    while ((std::size_t{1} << log2_size) < size) ++log2_size;

    twiddles_.resize(size / 2);
    for (std::size_t k = 0; k < size / 2; ++k) {
        const double angle = -kTwoPi * static_cast<double>(k) / static_cast<double>(size);
        twiddles_[k] = {std::cos(angle), std::sin(angle)};
    }

    bit_reversed_.resize(size);
    for (std::size_t i = 0; i < size; ++i) {
        std::uint32_t r = 0;
        for (int b = 0; b < log2_size; ++b) {
            r = (r << 1) | ((i >> b) & 1u);
        }
        bit_reversed_[i] = r;
    }
}

void Fft::transform(std::complex<double>* data, bool conjugate_twiddles) const {
    for (std::size_t i = 0; i < size_; ++i) {
        const std::uint32_t j = bit_reversed_[i];
        if (i < j) std::swap(data[i], data[j]);
    }

    for (std::size_t len = 2; len <= size_; len <<= 1) {
        const std::size_t half = len >> 1;
        const std::size_t step = size_ / len;
        for (std::size_t block = 0; block < size_; block += len) {
            for (std::size_t k = 0; k < half; ++k) {
                std::complex<double> w = twiddles_[k * step];
                if (conjugate_twiddles) w = std::conj(w);
                std::complex<double>& u = data[block + k];
                std::complex<double>& v = data[block + k + half];
                const double vr = v.real() * w.real() - v.imag() * w.imag();
                const double vi = v.real() * w.imag() + v.imag() * w.real();
                v = {u.real() - vr, u.imag() - vi};
                u = {u.real() + vr, u.imag() + vi};
            }
        }
    }
}

}  // namespace fbmrec
