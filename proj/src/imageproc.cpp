#include "numeral_hmm/imageproc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace numeral_hmm {

namespace detail {

int crossing_transitions(const BinaryImage& img, int row, int col) {
    int count = 0;
    for (int k = 0; k < 8; ++k) {
        bool cur = img.at(row + kNeighborRow[k], col + kNeighborCol[k]);
        int kn = (k + 1) & 7;
        bool nxt = img.at(row + kNeighborRow[kn], col + kNeighborCol[kn]);
        if (!cur && nxt) ++count;
    }
    return count;
}

int neighbor_count(const BinaryImage& img, int row, int col) {
    int count = 0;
    for (int k = 0; k < 8; ++k)
        count += img.at(row + kNeighborRow[k], col + kNeighborCol[k]);
    return count;
}

}  // namespace detail

int otsu_threshold(const GrayImage& img) {
    std::array<long long, 256> hist{};
    for (auto v : img.pixels()) ++hist[v];
    const double total = static_cast<double>(img.pixels().size());

    double sum_all = 0;
    for (int i = 0; i < 256; ++i) sum_all += static_cast<double>(i) * hist[i];

    int best_cut = 0;
    double best_var = -1.0;
    double w0 = 0, sum0 = 0;
    // Cut t splits {< t} vs {>= t}; t = 0 leaves class 0 empty.
    for (int t = 0; t < 256; ++t) {
        if (t > 0) {
            w0 += hist[t - 1];
            sum0 += static_cast<double>(t - 1) * hist[t - 1];
        }
        double w1 = total - w0;
        if (w0 == 0 || w1 == 0) {
            if (best_var < 0) {
                best_var = 0;
                best_cut = t;
            }
            continue;
        }
        double mu0 = sum0 / w0;
        double mu1 = (sum_all - sum0) / w1;
        double var = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
        if (var > best_var) {
            best_var = var;
            best_cut = t;
        }
    }
    return best_cut;
}

BinaryImage binarize(const GrayImage& img, BinarizeMode mode) {
    int t = mode.kind == BinarizeMode::Kind::Otsu ? otsu_threshold(img) : mode.threshold;
    BinaryImage out(img.width(), img.height());
    for (int r = 0; r < img.height(); ++r)
        for (int c = 0; c < img.width(); ++c)
            out.set(r, c, img.at(r, c) < t);
    return out;
}

BinaryImage remove_isolated_pixels(const BinaryImage& img) {
    BinaryImage out = img;
    for (int r = 0; r < img.height(); ++r)
        for (int c = 0; c < img.width(); ++c)
            if (img.at(r, c) && detail::neighbor_count(img, r, c) == 0) out.set(r, c, false);
    return out;
}

BinaryImage fill_holes(const BinaryImage& img) {
    BinaryImage out = img;
    for (int r = 0; r < img.height(); ++r)
        for (int c = 0; c < img.width(); ++c)
            if (!img.at(r, c) && detail::neighbor_count(img, r, c) == 8) out.set(r, c, true);
    return out;
}

std::optional<BoundingBox> foreground_bbox(const BinaryImage& img) {
    BoundingBox bb{img.height(), img.width(), -1, -1};
    for (int r = 0; r < img.height(); ++r)
        for (int c = 0; c < img.width(); ++c)
            if (img.at(r, c)) {
                bb.top = std::min(bb.top, r);
                bb.left = std::min(bb.left, c);
                bb.bottom = std::max(bb.bottom, r);
                bb.right = std::max(bb.right, c);
            }
    if (bb.bottom < 0) return std::nullopt;
    return bb;
}

BinaryImage normalize_size(const BinaryImage& img, int side) {
    auto bb = foreground_bbox(img);
    if (!bb) throw EmptyImageError("normalize_size: image has no foreground pixel");
    if (side < 16) throw Error("normalize_size: side must be >= 16");

    const int target = side - 4;
    const double scale = static_cast<double>(target) / std::max(bb->width(), bb->height());
    int th, tw;
    if (bb->height() >= bb->width()) {
        th = target;
        tw = std::max(1, static_cast<int>(std::lround(bb->width() * scale)));
    } else {
        tw = target;
        th = std::max(1, static_cast<int>(std::lround(bb->height() * scale)));
    }

    // Box-occupancy resampling: an output cell is ink when at least half of
    // the source area it covers is ink. For scale 1 this is the identity.
    BinaryImage out(side, side);
    const int row_off = (side - th) / 2;
    const int col_off = (side - tw) / 2;
    for (int r = 0; r < th; ++r) {
        const double y0 = r / scale, y1 = (r + 1) / scale;
        for (int c = 0; c < tw; ++c) {
            const double x0 = c / scale, x1 = (c + 1) / scale;
            double covered = 0;
            for (int i = static_cast<int>(std::floor(y0)); i < std::ceil(y1); ++i) {
                const double wy =
                    std::min(y1, static_cast<double>(i + 1)) - std::max(y0, static_cast<double>(i));
                if (wy <= 0) continue;
                for (int j = static_cast<int>(std::floor(x0)); j < std::ceil(x1); ++j) {
                    const double wx = std::min(x1, static_cast<double>(j + 1)) -
                                      std::max(x0, static_cast<double>(j));
                    if (wx <= 0) continue;
                    if (img.at(bb->top + i, bb->left + j)) covered += wy * wx;
                }
            }
            const double area = (y1 - y0) * (x1 - x0);
            out.set(row_off + r, col_off + c, covered >= 0.5 * area);
        }
    }
    return out;
}

namespace {

// Zhang-Suen candidate test on the frozen snapshot. Subiteration 0 requires
// N*E*S = 0 and E*S*W = 0; subiteration 1 requires N*E*W = 0 and N*S*W = 0.
bool zs_candidate(const BinaryImage& img, int r, int c, int subiter) {
    if (!img.at(r, c)) return false;
    const bool n = img.at(r - 1, c), s = img.at(r + 1, c);
    const bool e = img.at(r, c + 1), w = img.at(r, c - 1);
    const int b = detail::neighbor_count(img, r, c);
    if (b < 2 || b > 6) return false;
    if (detail::crossing_transitions(img, r, c) != 1) return false;
    if (subiter == 0) return !(n && e && s) && !(e && s && w);
    return !(n && e && w) && !(n && s && w);
}

// Deleting a pixel with crossing number 1 and 2..6 neighbors keeps both the
// 8-connected foreground components and 4-connected background components
// intact, so re-checking at deletion time makes every peel topology-safe.
bool deletable_now(const BinaryImage& img, int r, int c) {
    const int b = detail::neighbor_count(img, r, c);
    if (b < 2 || b > 6) return false;
    return detail::crossing_transitions(img, r, c) == 1;
}

bool thin_pass(BinaryImage& img, int subiter) {
    std::vector<Pixel> candidates;
    for (int r = 0; r < img.height(); ++r)
        for (int c = 0; c < img.width(); ++c)
            if (zs_candidate(img, r, c, subiter)) candidates.push_back({r, c});

    bool changed = false;
    for (const auto& p : candidates) {
        if (deletable_now(img, p.row, p.col)) {
            img.set(p, false);
            changed = true;
        }
    }
    return changed;
}

}  // namespace

Skeleton thin(const BinaryImage& img) {
    BinaryImage work = img;
    bool changed = true;
    while (changed) {
        bool a = thin_pass(work, 0);
        bool b = thin_pass(work, 1);
        changed = a || b;
    }
    return Skeleton{std::move(work)};
}

Skeleton prune_spurs(const Skeleton& skel, int min_length) {
    if (min_length <= 0) return skel;
    BinaryImage work = skel.image;
    bool pruned = true;
    while (pruned) {
        pruned = false;
        for (int r = 0; r < work.height() && !pruned; ++r) {
            for (int c = 0; c < work.width() && !pruned; ++c) {
                if (!work.at(r, c) || detail::crossing_transitions(work, r, c) != 1) continue;
                if (detail::neighbor_count(work, r, c) != 1) continue;
                // Walk from the endpoint until a junction or another endpoint.
                std::vector<Pixel> branch{{r, c}};
                Pixel prev{-1, -1}, cur{r, c};
                bool hit_junction = false;
                while (static_cast<int>(branch.size()) < min_length) {
                    Pixel next{-1, -1};
                    for (int k = 0; k < 8; ++k) {
                        Pixel q{cur.row + detail::kNeighborRow[k],
                                cur.col + detail::kNeighborCol[k]};
                        if (work.at(q) && q != prev) {
                            next = q;
                            break;
                        }
                    }
                    if (next.row < 0) break;
                    if (detail::crossing_transitions(work, next.row, next.col) >= 3) {
                        hit_junction = true;
                        break;
                    }
                    branch.push_back(next);
                    prev = cur;
                    cur = next;
                }
                if (hit_junction && static_cast<int>(branch.size()) < min_length) {
                    for (const auto& p : branch) work.set(p, false);
                    pruned = true;
                }
            }
        }
    }
    return thin(work);
}

int count_components(const BinaryImage& img) {
    int count = 0;
    const int h = img.height(), w = img.width();
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(h) * w, 0);
    auto idx = [w](int r, int c) { return static_cast<std::size_t>(r) * w + c; };
    std::vector<Pixel> stack;
    for (int r0 = 0; r0 < h; ++r0)
        for (int c0 = 0; c0 < w; ++c0) {
            if (!img.at(r0, c0) || seen[idx(r0, c0)]) continue;
            ++count;
            seen[idx(r0, c0)] = 1;
            stack.assign(1, {r0, c0});
            while (!stack.empty()) {
                Pixel p = stack.back();
                stack.pop_back();
                for (int k = 0; k < 8; ++k) {
                    int nr = p.row + detail::kNeighborRow[k];
                    int nc = p.col + detail::kNeighborCol[k];
                    if (img.at(nr, nc) && !seen[idx(nr, nc)]) {
                        seen[idx(nr, nc)] = 1;
                        stack.push_back({nr, nc});
                    }
                }
            }
        }
    return count;
}

int count_holes(const BinaryImage& img) {
    const int h = img.height(), w = img.width();
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(h) * w, 0);
    auto idx = [w](int r, int c) { return static_cast<std::size_t>(r) * w + c; };
    static constexpr int dr[4] = {-1, 1, 0, 0};
    static constexpr int dc[4] = {0, 0, -1, 1};

    std::vector<Pixel> stack;
    auto flood = [&](int r0, int c0) {
        seen[idx(r0, c0)] = 1;
        stack.assign(1, {r0, c0});
        while (!stack.empty()) {
            Pixel p = stack.back();
            stack.pop_back();
            for (int k = 0; k < 4; ++k) {
                int nr = p.row + dr[k], nc = p.col + dc[k];
                if (img.in_bounds(nr, nc) && !img.at(nr, nc) && !seen[idx(nr, nc)]) {
                    seen[idx(nr, nc)] = 1;
                    stack.push_back({nr, nc});
                }
            }
        }
    };

    // Consume all background connected to the border first.
    for (int r = 0; r < h; ++r) {
        if (!img.at(r, 0) && !seen[idx(r, 0)]) flood(r, 0);
        if (!img.at(r, w - 1) && !seen[idx(r, w - 1)]) flood(r, w - 1);
    }
    for (int c = 0; c < w; ++c) {
        if (!img.at(0, c) && !seen[idx(0, c)]) flood(0, c);
        if (!img.at(h - 1, c) && !seen[idx(h - 1, c)]) flood(h - 1, c);
    }

    int holes = 0;
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c)
            if (!img.at(r, c) && !seen[idx(r, c)]) {
                ++holes;
                flood(r, c);
            }
    return holes;
}

}  // namespace numeral_hmm
