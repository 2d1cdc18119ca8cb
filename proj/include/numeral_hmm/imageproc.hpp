#ifndef NUMERAL_HMM_IMAGEPROC_HPP
#define NUMERAL_HMM_IMAGEPROC_HPP

#include <optional>

#include "numeral_hmm/image.hpp"

namespace numeral_hmm {

/// Thresholding policy for binarize(). Otsu picks the threshold that
/// maximizes between-class variance of the 256-bin histogram; Fixed uses
/// the given cut. Foreground is ink: intensity strictly below the threshold.
struct BinarizeMode {
    enum class Kind { Otsu, Fixed } kind = Kind::Otsu;
    int threshold = 128;  // used when kind == Fixed

    static BinarizeMode otsu() { return {Kind::Otsu, 0}; }
    static BinarizeMode fixed(int t) { return {Kind::Fixed, t}; }
};

/// Exhaustive Otsu threshold over candidate cuts 0..255, where a cut t
/// splits intensities into {< t} and {>= t}. Smallest maximizing cut wins.
int otsu_threshold(const GrayImage& img);

BinaryImage binarize(const GrayImage& img, BinarizeMode mode = BinarizeMode::otsu());

/// Clears every foreground pixel with no foreground 8-neighbor. Single pass.
BinaryImage remove_isolated_pixels(const BinaryImage& img);

/// Sets every background pixel whose 8 neighbors are all foreground. Single pass.
BinaryImage fill_holes(const BinaryImage& img);

/// Crops to the foreground bounding box, scales by one factor so the larger
/// side equals side-4, resamples by box occupancy (>= 0.5 is ink), and
/// centers in a side x side canvas. Throws EmptyImageError on blank input.
BinaryImage normalize_size(const BinaryImage& img, int side = 64);

/// Two-subiteration boundary peeling (Zhang-Suen conditions) iterated to a
/// fixpoint. Candidates are gathered per subiteration from a frozen snapshot
/// and then deleted sequentially, each deletion re-checked against the
/// current raster (crossing number 1, neighbor count 2..6) so that the
/// 8-connected component count and 4-connected hole count of the input are
/// preserved exactly. Idempotent: thin(thin(x).image) == thin(x).
Skeleton thin(const BinaryImage& img);

/// Removes open branches shorter than min_length pixels (endpoint up to but
/// not including the junction they hang off), then re-thins. min_length <= 0
/// is a no-op.
Skeleton prune_spurs(const Skeleton& skel, int min_length);

/// Number of 8-connected foreground components.
int count_components(const BinaryImage& img);

/// Number of 4-connected background components not touching the border.
int count_holes(const BinaryImage& img);

/// Foreground bounding box as (top, left, bottom, right), inclusive.
struct BoundingBox {
    int top, left, bottom, right;
    int width() const { return right - left + 1; }
    int height() const { return bottom - top + 1; }
};
std::optional<BoundingBox> foreground_bbox(const BinaryImage& img);

namespace detail {
// Neighbors of a pixel clockwise from north: N, NE, E, SE, S, SW, W, NW.
inline constexpr int kNeighborRow[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
inline constexpr int kNeighborCol[8] = {0, 1, 1, 1, 0, -1, -1, -1};

// Count of 0->1 transitions in the cyclic clockwise neighbor sequence.
int crossing_transitions(const BinaryImage& img, int row, int col);
int neighbor_count(const BinaryImage& img, int row, int col);
}  // namespace detail

}  // namespace numeral_hmm

#endif
