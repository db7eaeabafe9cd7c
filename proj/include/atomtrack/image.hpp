#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace atomtrack {

/// Dense row-major intensity grid. Row index = y, column index = x,
/// pixel centers sit at integer coordinates.
template <typename Scalar>
using ImageT = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Image = ImageT<double>;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One grayscale frame of an image stack. Intensities are normalized to [0,1]
/// once the stack has passed through normalize_stack.
struct Frame {
    int index = 0;
    Image pixels;

    int width() const { return static_cast<int>(pixels.cols()); }
    int height() const { return static_cast<int>(pixels.rows()); }
};

struct ImageStack {
    std::vector<Frame> frames;

    int size() const { return static_cast<int>(frames.size()); }
    int width() const { return frames.empty() ? 0 : frames.front().width(); }
    int height() const { return frames.empty() ? 0 : frames.front().height(); }
};

/// Throws DataError unless all frames share one shape, indices run 0..N-1 and
/// every pixel is finite.
void validate_stack(const ImageStack& stack);

/// Affine map of the whole stack onto [0,1] using the single global min/max.
/// A constant stack maps to all zeros.
ImageStack normalize_stack(const ImageStack& stack);

}  // namespace atomtrack
