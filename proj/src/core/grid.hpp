#ifndef EDGECURRENT_CORE_GRID_HPP
#define EDGECURRENT_CORE_GRID_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "core/error.hpp"

namespace edgecurrent {

/// Dense row-major grid of doubles. Cell (i, j) addresses row i of axis-1
/// and column j of axis-2, 0-based; the lattice point it represents has
/// coordinates (i + 1, j + 1).
class Grid {
public:
    Grid() : rows_(0), cols_(0) {}

    Grid(int rows, int cols, double value = 0.0)
        : rows_(rows), cols_(cols),
          data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), value) {
        if (rows < 0 || cols < 0)
            throw error(errc::invalid_argument, "negative grid extent");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    size_t size() const { return data_.size(); }

    double &at(int i, int j) { return data_[index(i, j)]; }
    double at(int i, int j) const { return data_[index(i, j)]; }

    /// Value with zero padding outside the grid.
    double at_or_zero(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            return 0.0;
        return data_[index(i, j)];
    }

    bool same_shape(const Grid &other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    /// Sum of all entries in row-major order. The order is part of the
    /// contract: reduction results must be reproducible bit for bit.
    double sum() const {
        double total = 0.0;
        for (double v : data_)
            total += v;
        return total;
    }

    double max_value() const {
        double best = 0.0;
        for (double v : data_)
            if (v > best)
                best = v;
        return best;
    }

    std::span<const double> data() const { return data_; }
    std::span<double> data() { return data_; }

    friend bool operator==(const Grid &a, const Grid &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    size_t index(int i, int j) const {
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) +
               static_cast<size_t>(j);
    }

    int rows_;
    int cols_;
    std::vector<double> data_;
};

/// Binary occupancy grid (inside/outside indicator).
struct BitGrid {
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> cells;
    /// Set when rasterization produced no occupied cell (degenerate input).
    bool empty_warning = false;

    BitGrid() = default;
    BitGrid(int r, int c)
        : rows(r), cols(c),
          cells(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}

    uint8_t &at(int i, int j) {
        return cells[static_cast<size_t>(i) * cols + j];
    }
    uint8_t at(int i, int j) const {
        return cells[static_cast<size_t>(i) * cols + j];
    }
    uint8_t at_or_zero(int i, int j) const {
        if (i < 0 || i >= rows || j < 0 || j >= cols)
            return 0;
        return cells[static_cast<size_t>(i) * cols + j];
    }

    long ones() const {
        long n = 0;
        for (uint8_t v : cells)
            n += v;
        return n;
    }
};

} // namespace edgecurrent

#endif
