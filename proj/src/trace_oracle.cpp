// Geometric computation of codes. Nothing here uses cutting sequences or the
// product formulas of codes.cpp; it walks the squares crossed by a segment and
// the squares arranged around the segment's endpoint.

#include "origami/codes.hpp"

namespace origami {

namespace {

// Which corner of `square` sits at the vertex under consideration. A square
// whose SW corner is the vertex fills the quadrant north-east of it, and so on.
enum class Corner { sw, se, ne, nw };

struct Sector {
  int square;
  Corner corner;
};

// Next sector counterclockwise around the vertex.
Sector turn_ccw(const Surface& x, Sector s) {
  switch (s.corner) {
    case Corner::sw:  // cross the ray going north: left edge of the square
      return {x.sigma().inverse()[s.square], Corner::se};
    case Corner::se:  // ray going west: bottom edge
      return {x.tau().inverse()[s.square], Corner::ne};
    case Corner::ne:  // ray going south: right edge
      return {x.sigma()[s.square], Corner::nw};
    case Corner::nw:  // ray going east: top edge
      return {x.tau()[s.square], Corner::sw};
  }
  return s;
}

// Next sector clockwise.
Sector turn_cw(const Surface& x, Sector s) {
  switch (s.corner) {
    case Corner::sw:  // ray going east: bottom edge
      return {x.tau().inverse()[s.square], Corner::nw};
    case Corner::nw:  // ray going south: left edge
      return {x.sigma().inverse()[s.square], Corner::ne};
    case Corner::ne:  // ray going west: top edge
      return {x.tau()[s.square], Corner::se};
    case Corner::se:  // ray going north: right edge
      return {x.sigma()[s.square], Corner::sw};
  }
  return s;
}

// The segment from the SW corner of `start` in direction (q, p), followed to
// its far endpoint. Returns the sector south-west of the endpoint that the
// arriving segment borders or passes through.
Sector arrival(const Surface& x, int start, const Slope& r) {
  if (r.p == 0) {
    // Along the bottom edge of `start` to its SE corner; the arriving segment
    // is the top edge of the square below.
    return turn_ccw(x, {start, Corner::se});
  }
  if (r.q == 0) {
    // Up the left edge to the NW corner; the arriving segment is the right
    // edge of the square to the left.
    return turn_cw(x, {start, Corner::nw});
  }
  // Walk the unfolded cells [cx, cx+1] x [cy, cy+1] met by y = (p/q) x.
  int square = start;
  std::int64_t cx = 0, cy = 0;
  while (true) {
    const std::int64_t at_right = r.p * (cx + 1);  // q * height where it meets x = cx + 1
    const std::int64_t top = r.q * (cy + 1);
    if (at_right < top) {
      square = x.sigma()[square];
      ++cx;
    } else if (at_right > top) {
      square = x.tau()[square];
      ++cy;
    } else {
      return {square, Corner::ne};
    }
  }
}

}  // namespace

TraceCodes trace_oracle(const Surface& x, const Slope& r) {
  const std::size_t n = x.degree();
  std::vector<int> code(n), left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Sector end = arrival(x, static_cast<int>(i), r);
    code[i] = end.square;
    // The next segment of the same direction leaving the endpoint lies half a
    // turn away, i.e. two quadrant sectors, in the sector whose SW corner is the
    // endpoint. Clockwise keeps the cylinder on the left, counterclockwise on
    // the right.
    const Sector l = turn_cw(x, turn_cw(x, end));
    const Sector rr = turn_ccw(x, turn_ccw(x, end));
    left[i] = l.square;
    right[i] = rr.square;
  }
  return {Permutation::from_images(std::move(code)), Permutation::from_images(std::move(left)),
          Permutation::from_images(std::move(right))};
}

}  // namespace origami
