#include "chow/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chow {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("parts not weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    std::vector<int> conj(width(), 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c) ++conj[c];
    return Partition(std::move(conj));
}

int Partition::col_height(int c) const {
    int h = 0;
    for (int p : parts_)
        if (p > c) ++h;
    return h;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Tableau::Tableau(Partition shape, std::vector<std::uint8_t> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != shape_.size())
        throw std::invalid_argument("entry count does not match shape");
    offset_.resize(shape_.rows());
    int off = 0;
    for (int r = 0; r < shape_.rows(); ++r) {
        offset_[r] = off;
        off += shape_.part(r);
    }
}

bool Tableau::is_semistandard() const {
    for (int r = 0; r < shape_.rows(); ++r)
        for (int c = 0; c + 1 < shape_.part(r); ++c)
            if (at(r, c) > at(r, c + 1)) return false;
    for (int r = 0; r + 1 < shape_.rows(); ++r)
        for (int c = 0; c < shape_.part(r + 1); ++c)
            if (at(r, c) >= at(r + 1, c)) return false;
    return true;
}

std::vector<std::uint8_t> Tableau::column_word() const {
    std::vector<std::uint8_t> w;
    w.reserve(entries_.size());
    for (int c = 0; c < shape_.width(); ++c)
        for (int r = 0; r < shape_.rows(); ++r)
            if (shape_.part(r) > c) w.push_back(at(r, c));
    return w;
}

std::vector<int> Tableau::content(int n) const {
    std::vector<int> ct(n, 0);
    for (std::uint8_t e : entries_) {
        if (e < 1 || e > n) throw std::invalid_argument("entry out of range");
        ++ct[e - 1];
    }
    return ct;
}

bool Tableau::operator<(const Tableau& rhs) const {
    if (shape_ != rhs.shape_) return shape_ < rhs.shape_;
    return column_word() < rhs.column_word();
}

std::string Tableau::str() const {
    std::string s;
    for (int r = 0; r < shape_.rows(); ++r) {
        if (r) s += "/";
        for (int c = 0; c < shape_.part(r); ++c) s += std::to_string(int(at(r, c)));
    }
    return s;
}

namespace {

void enumerate_rec(const Partition& shape, int n, int r, int c,
                   std::vector<std::uint8_t>& buf, std::vector<Tableau>& out) {
    if (r == shape.rows()) {
        out.emplace_back(shape, buf);
        return;
    }
    int next_r = r, next_c = c + 1;
    if (next_c == shape.part(r)) {
        next_r = r + 1;
        next_c = 0;
    }
    int row_off = 0;
    for (int i = 0; i < r; ++i) row_off += shape.part(i);
    int lo = 1;
    if (c > 0) lo = std::max(lo, static_cast<int>(buf[row_off + c - 1]));  // row weak
    if (r > 0) {
        int above_off = row_off - shape.part(r - 1);
        lo = std::max(lo, buf[above_off + c] + 1);  // column strict
    }
    for (int v = lo; v <= n; ++v) {
        buf.push_back(static_cast<std::uint8_t>(v));
        enumerate_rec(shape, n, next_r, next_c, buf, out);
        buf.pop_back();
    }
}

}  // namespace

std::vector<Tableau> ssyt_enumerate(const Partition& shape, int n) {
    std::vector<Tableau> out;
    if (shape.rows() > n) return out;
    if (shape.size() == 0) {
        out.emplace_back(shape, std::vector<std::uint8_t>{});
        return out;
    }
    std::vector<std::uint8_t> buf;
    buf.reserve(shape.size());
    enumerate_rec(shape, n, 0, 0, buf, out);
    std::sort(out.begin(), out.end(),
              [](const Tableau& a, const Tableau& b) { return a.column_word() < b.column_word(); });
    return out;
}

BigInt schur_dimension(const Partition& shape, int n) {
    if (shape.rows() > n) return 0;
    Partition conj = shape.conjugate();
    BigInt num = 1, den = 1;
    for (int r = 0; r < shape.rows(); ++r)
        for (int c = 0; c < shape.part(r); ++c) {
            int content = c - r;
            int hook = (shape.part(r) - c) + (conj.part(c) - r) - 1;
            num *= n + content;
            den *= hook;
        }
    BigInt q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) throw std::logic_error("hook content formula did not divide");
    return q;
}

Tableau canonical_tableau(const Partition& shape) {
    std::vector<std::uint8_t> entries;
    entries.reserve(shape.size());
    for (int r = 0; r < shape.rows(); ++r)
        for (int c = 0; c < shape.part(r); ++c)
            entries.push_back(static_cast<std::uint8_t>(r + 1));
    return Tableau(shape, std::move(entries));
}

}  // namespace chow
