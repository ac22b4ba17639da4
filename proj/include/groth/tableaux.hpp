#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "groth/poly.hpp"

namespace groth {

// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
// stripped; callers that need an explicit length (e.g. k parts including
// zeros) carry that length separately.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts);

    // Parses "2,1,0". Empty string is the empty partition.
    static Partition parse(const std::string& text);

    std::span<const int> parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // lambda_i, 1-based; zero beyond the length.
    int part(int i) const;
    int size() const;  // |lambda|
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
    // Zero-padded to exactly n parts; throws InvalidShape if longer.
    std::vector<int> padded(int n) const;
    // Column lengths (conjugate partition).
    std::vector<int> columns() const;
    bool contained_in(const Partition& box) const;

    std::string to_string() const;  // "(2,1)", "()" for empty

    friend bool operator==(const Partition&, const Partition&) = default;

  private:
    std::vector<int> parts_;
};

// Every partition contained in the rows x cols box, in lexicographic order
// of part sequences (empty first).
std::vector<Partition> partitions_in_box(int rows, int cols);

struct Square {
    int row = 1;
    int col = 1;
    int content() const { return col - row; }
    friend bool operator==(const Square&, const Square&) = default;
};

// Subsets of [n] as bitmasks, bit t-1 for entry t; n <= 31.
using EntrySet = std::uint32_t;

int set_min(EntrySet s);
int set_max(EntrySet s);
std::vector<int> set_entries(EntrySet s);

class SetValuedTableau {
  public:
    SetValuedTableau() = default;
    // `fill` lists cells in row-major order.
    SetValuedTableau(Partition shape, std::vector<EntrySet> fill);

    const Partition& shape() const { return shape_; }
    std::span<const EntrySet> fill() const { return fill_; }
    EntrySet at(Square s) const;
    std::vector<Square> cells() const;
    int total_entries() const;  // |T|
    bool all_singletons() const;

    friend bool operator==(const SetValuedTableau&, const SetValuedTableau&) = default;

  private:
    Partition shape_;
    std::vector<EntrySet> fill_;
};

std::vector<Square> cells_row_major(const Partition& shape);

// Lazy enumeration of T(lambda, n). Cells are visited in row-major order and,
// within a cell, candidate subsets in lexicographic order of their sorted
// entry lists ({1} < {1,2} < {1,2,3} < {1,3} < {2} ...). The stream is the
// depth-first traversal in that order.
class TableauStream {
  public:
    TableauStream(Partition shape, int n, bool singletons_only = false);

    std::optional<SetValuedTableau> next();

  private:
    bool advance_cell(std::size_t idx);
    int lower_bound(std::size_t idx) const;

    Partition shape_;
    int n_;
    std::vector<Square> cells_;
    std::vector<int> cap_;               // max entry allowed in each cell
    std::vector<int> left_, above_;      // neighbor cell indices or -1
    std::vector<EntrySet> candidates_;   // all admissible subsets, lex order
    std::vector<int> choice_;            // index into candidates_ per cell
    std::vector<EntrySet> fill_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<SetValuedTableau> enumerate(const Partition& shape, int n);
std::vector<SetValuedTableau> enumerate_ssyt(const Partition& shape, int n);
std::uint64_t count(const Partition& shape, int n);
std::uint64_t count_ssyt(const Partition& shape, int n);

// Checks row/column conditions directly against the definition.
bool is_valid_tableau(const SetValuedTableau& t, int n);

// Largest y index any tableau in T(lambda, n) touches: n + lambda_1 - 1.
int required_y(const Partition& shape, int n);

// beta^{|T|-|lambda|} prod_cells prod_{t in T(a)} (x_t (+) y_{t+c(a)})
Polynomial weight(const SetValuedTableau& t, Universe u);

// Sum of weight(T) over T(lambda, n).
// tableau_sum_reference: literal sum over the stream.
// tableau_sum_serial: depth-first with shared prefix products.
// tableau_sum_parallel: the same traversal split into subtrees under OpenMP;
//   partial sums are combined in traversal order.
Polynomial tableau_sum_reference(const Partition& shape, int n, Universe u);
Polynomial tableau_sum_serial(const Partition& shape, int n, Universe u);
Polynomial tableau_sum_parallel(const Partition& shape, int n, Universe u, int threads);
Polynomial tableau_sum(const Partition& shape, int n, Universe u);

}  // namespace groth
