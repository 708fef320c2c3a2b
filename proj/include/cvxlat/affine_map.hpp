#ifndef CVXLAT_AFFINE_MAP_HPP
#define CVXLAT_AFFINE_MAP_HPP

#include <utility>

#include "cvxlat/body.hpp"

namespace cvxlat {

/// Injective affine transformation x -> M x + t between rational coordinate
/// spaces. The matrix must have full column rank.
class AffineMap {
  public:
    AffineMap(MatQ matrix, VecQ offset)
        : matrix_(std::move(matrix)), offset_(std::move(offset)) {
        if (matrix_.rows() != offset_.size())
            throw DimensionMismatchError("AffineMap: offset size differs from matrix rows");
        if (rank(matrix_) != matrix_.cols())
            throw RankDeficientError("AffineMap: matrix does not have full column rank");
    }

    int source_dim() const { return static_cast<int>(matrix_.cols()); }
    int target_dim() const { return static_cast<int>(matrix_.rows()); }
    const MatQ& matrix() const { return matrix_; }
    const VecQ& offset() const { return offset_; }

    Point apply(const Point& x) const {
        if (x.size() != matrix_.cols())
            throw DimensionMismatchError("AffineMap: point of wrong dimension");
        return matrix_ * x + offset_;
    }

    ConvexBody apply(const ConvexBody& c) const {
        if (c.ambient_dim() != source_dim())
            throw DimensionMismatchError("AffineMap: body of wrong dimension");
        if (c.is_empty()) return ConvexBody::empty(target_dim());
        std::vector<Point> pts;
        pts.reserve(c.vertices().size());
        for (const auto& v : c.vertices()) pts.push_back(apply(v));
        // affine images of vertices stay extreme for injective maps
        return ConvexBody::hull(target_dim(), std::move(pts));
    }

    /// Preimage of p under the map, when p lies in the image.
    std::optional<Point> preimage(const Point& p) const {
        return solve_unique(matrix_, p - offset_);
    }

    bool image_contains(const Point& p) const { return preimage(p).has_value(); }

    /// Whether v is parallel to the image (lies in the column span).
    bool direction_in_image(const VecQ& v) const {
        MatQ aug(matrix_.rows(), matrix_.cols() + 1);
        aug.leftCols(matrix_.cols()) = matrix_;
        aug.col(matrix_.cols()) = v;
        return rank(aug) == matrix_.cols();
    }

    bool operator==(const AffineMap& o) const {
        if (matrix_.rows() != o.matrix_.rows() || matrix_.cols() != o.matrix_.cols()) return false;
        for (Eigen::Index i = 0; i < matrix_.rows(); ++i)
            for (Eigen::Index j = 0; j < matrix_.cols(); ++j)
                if (matrix_(i, j) != o.matrix_(i, j)) return false;
        return vec_eq(offset_, o.offset_);
    }

  private:
    MatQ matrix_;
    VecQ offset_;
};

}  // namespace cvxlat

#endif
