#include "nsg/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "nsg/errors.hpp"

namespace nsg {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p]) {
      throw ParseError("image array is not a bijection on " + std::to_string(images.size()) +
                       " points");
    }
    seen[p] = true;
  }
  Permutation out(0);
  out.images_ = std::move(images);
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point p = static_cast<Point>(start); !done[p]; p = images_[p]) {
      done[p] = true;
      cycle.push_back(p + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

namespace {

class CycleParser {
 public:
  CycleParser(std::string_view text, std::size_t degree) : text_(text), degree_(degree) {}

  Permutation parse() {
    std::vector<Point> images(degree_);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> used(degree_, false);

    skip_space();
    while (pos_ < text_.size()) {
      expect('(');
      std::vector<Point> cycle;
      skip_separators();
      while (pos_ < text_.size() && text_[pos_] != ')') {
        Point p = read_point();
        if (used[p]) fail("repeated point " + std::to_string(p + 1));
        used[p] = true;
        cycle.push_back(p);
        skip_separators();
      }
      expect(')');
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
      skip_space();
    }
    return Permutation::from_images(std::move(images));
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cycle notation '" + std::string(text_) + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void skip_separators() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ',')) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "' at offset " + std::to_string(pos_));
    }
    ++pos_;
  }

  Point read_point() {
    if (!std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    }
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > degree_) break;
      ++pos_;
    }
    if (value < 1 || value > degree_) {
      fail("point " + std::to_string(value) + " out of range 1.." + std::to_string(degree_));
    }
    return static_cast<Point>(value - 1);
  }

  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  if (degree == 0) throw ParseError("degree must be at least 1");
  return CycleParser(text, degree).parse();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw PreconditionError("compose: degree mismatch " + std::to_string(a.degree()) + " vs " +
                            std::to_string(b.degree()));
  }
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = b(a(static_cast<Point>(i)));
  return Permutation::from_images(std::move(images));
}

std::uint64_t element_order(const Permutation& a) {
  std::uint64_t order = 1;
  for (const auto& c : a.cycles()) order = std::lcm(order, static_cast<std::uint64_t>(c.size()));
  return order;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_cycle_string(); }

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image array.
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace nsg
