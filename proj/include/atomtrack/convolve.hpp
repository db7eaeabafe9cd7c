#pragma once

#include "atomtrack/image.hpp"

#include <cmath>
#include <vector>

namespace atomtrack {

struct BlurParams {
    double sigma = 4.0;
};

/// Sampled Gaussian, truncated at 4*sigma and renormalized to sum 1.
/// Returned taps cover offsets [-radius, radius].
template <typename Scalar>
std::vector<Scalar> gaussian_kernel(Scalar sigma) {
    if (!(sigma > Scalar(0))) throw ConfigError("gaussian_kernel: sigma must be > 0");
    const int radius = std::max(1, static_cast<int>(std::ceil(4.0 * static_cast<double>(sigma))));
    std::vector<Scalar> k(2 * radius + 1);
    Scalar sum = 0;
    for (int i = -radius; i <= radius; ++i) {
        const Scalar v = std::exp(-Scalar(i) * Scalar(i) / (Scalar(2) * sigma * sigma));
        k[static_cast<size_t>(i + radius)] = v;
        sum += v;
    }
    for (Scalar& v : k) v /= sum;
    return k;
}

/// First-derivative-of-Gaussian taps (correlation convention: the tap at
/// offset j multiplies the sample at x+j, so sum_j j*k[j] ~ 1).
template <typename Scalar>
std::vector<Scalar> gaussian_deriv1_kernel(Scalar sigma) {
    std::vector<Scalar> g = gaussian_kernel(sigma);
    const int radius = static_cast<int>(g.size() / 2);
    std::vector<Scalar> k(g.size());
    for (int i = -radius; i <= radius; ++i)
        k[static_cast<size_t>(i + radius)] = Scalar(i) / (sigma * sigma) * g[static_cast<size_t>(i + radius)];
    return k;
}

/// Second-derivative-of-Gaussian taps; the DC component is subtracted so a
/// constant signal yields exactly zero.
template <typename Scalar>
std::vector<Scalar> gaussian_deriv2_kernel(Scalar sigma) {
    std::vector<Scalar> g = gaussian_kernel(sigma);
    const int radius = static_cast<int>(g.size() / 2);
    std::vector<Scalar> k(g.size());
    Scalar sum = 0;
    for (int i = -radius; i <= radius; ++i) {
        const Scalar s2 = sigma * sigma;
        const Scalar v = (Scalar(i) * Scalar(i) / (s2 * s2) - Scalar(1) / s2) * g[static_cast<size_t>(i + radius)];
        k[static_cast<size_t>(i + radius)] = v;
        sum += v;
    }
    const Scalar mean = sum / Scalar(k.size());
    for (Scalar& v : k) v -= mean;
    return k;
}

/// 1-D correlation along x (row direction) with edge replication.
template <typename Scalar>
ImageT<Scalar> correlate_rows(const ImageT<Scalar>& in, const std::vector<Scalar>& kernel) {
    const int h = static_cast<int>(in.rows());
    const int w = static_cast<int>(in.cols());
    const int radius = static_cast<int>(kernel.size() / 2);
    ImageT<Scalar> out(h, w);
    std::vector<Scalar> pad(static_cast<size_t>(w + 2 * radius));
    for (int y = 0; y < h; ++y) {
        const Scalar* row = in.data() + static_cast<ptrdiff_t>(y) * w;
        for (int i = 0; i < radius; ++i) pad[static_cast<size_t>(i)] = row[0];
        for (int x = 0; x < w; ++x) pad[static_cast<size_t>(x + radius)] = row[x];
        for (int i = 0; i < radius; ++i) pad[static_cast<size_t>(w + radius + i)] = row[w - 1];
        Scalar* dst = out.data() + static_cast<ptrdiff_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            Scalar acc = 0;
            const Scalar* src = pad.data() + x;
            for (size_t j = 0; j < kernel.size(); ++j) acc += kernel[j] * src[j];
            dst[x] = acc;
        }
    }
    return out;
}

/// 1-D correlation along y (column direction) with edge replication.
template <typename Scalar>
ImageT<Scalar> correlate_cols(const ImageT<Scalar>& in, const std::vector<Scalar>& kernel) {
    const int h = static_cast<int>(in.rows());
    const int w = static_cast<int>(in.cols());
    const int radius = static_cast<int>(kernel.size() / 2);
    ImageT<Scalar> out = ImageT<Scalar>::Zero(h, w);
    for (int y = 0; y < h; ++y) {
        auto dst = out.row(y);
        for (size_t j = 0; j < kernel.size(); ++j) {
            int sy = y + static_cast<int>(j) - radius;
            sy = sy < 0 ? 0 : (sy >= h ? h - 1 : sy);
            dst += kernel[j] * in.row(sy);
        }
    }
    return out;
}

/// Separable correlation: kernel_x along rows, then kernel_y along columns.
template <typename Scalar>
ImageT<Scalar> separable_correlate(const ImageT<Scalar>& in,
                                   const std::vector<Scalar>& kernel_x,
                                   const std::vector<Scalar>& kernel_y) {
    return correlate_cols(correlate_rows(in, kernel_x), kernel_y);
}

/// Isotropic Gaussian blur with edge replication. The kernel sums to 1, so a
/// constant frame is reproduced exactly and output values stay inside the
/// input range.
template <typename Scalar>
ImageT<Scalar> gaussian_blur(const ImageT<Scalar>& in, Scalar sigma) {
    const std::vector<Scalar> k = gaussian_kernel(sigma);
    return separable_correlate(in, k, k);
}

inline Frame gaussian_blur(const Frame& frame, const BlurParams& params) {
    return Frame{frame.index, gaussian_blur<double>(frame.pixels, params.sigma)};
}

}  // namespace atomtrack
