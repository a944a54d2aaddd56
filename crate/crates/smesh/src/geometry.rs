//! Geometric kernels for simplices in 2D and 3D.
//!
//! Points are stored with three coordinates; 2D geometry keeps `z = 0`.
//! All kernels take the ambient dimension explicitly where the vertex count
//! alone is ambiguous (three points are a cell in 2D but a facet in 3D).

use std::ops::{Add, Div, Mul, Neg, Sub};

/// A point (or vector) in 2D/3D. 2D points carry `z = 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point {
    pub const ZERO: Point = Point { x: 0.0, y: 0.0, z: 0.0 };

    pub fn new2(x: f64, y: f64) -> Self {
        Point { x, y, z: 0.0 }
    }

    pub fn new3(x: f64, y: f64, z: f64) -> Self {
        Point { x, y, z }
    }

    pub fn coord(&self, axis: usize) -> f64 {
        match axis {
            0 => self.x,
            1 => self.y,
            _ => self.z,
        }
    }

    pub fn set_coord(&mut self, axis: usize, v: f64) {
        match axis {
            0 => self.x = v,
            1 => self.y = v,
            _ => self.z = v,
        }
    }

    pub fn dot(&self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(&self, o: Point) -> Point {
        Point {
            x: self.y * o.z - self.z * o.y,
            y: self.z * o.x - self.x * o.z,
            z: self.x * o.y - self.y * o.x,
        }
    }

    /// z-component of the cross product; the 2D orientation kernel.
    pub fn cross2(&self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm2(&self) -> f64 {
        self.dot(*self)
    }

    pub fn norm(&self) -> f64 {
        self.norm2().sqrt()
    }

    pub fn dist(&self, o: Point) -> f64 {
        (*self - o).norm()
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new3(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new3(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new3(self.x * s, self.y * s, self.z * s)
    }
}

impl Div<f64> for Point {
    type Output = Point;
    fn div(self, s: f64) -> Point {
        Point::new3(self.x / s, self.y / s, self.z / s)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new3(-self.x, -self.y, -self.z)
    }
}

/// The vertices of one simplex, by value. Holds `dim + 1` points.
#[derive(Clone, Copy, Debug)]
pub struct SimplexPoints {
    pts: [Point; 4],
    len: u8,
}

impl SimplexPoints {
    pub fn new(pts: &[Point]) -> Self {
        debug_assert!(pts.len() >= 3 && pts.len() <= 4);
        let mut buf = [Point::ZERO; 4];
        buf[..pts.len()].copy_from_slice(pts);
        SimplexPoints { pts: buf, len: pts.len() as u8 }
    }

    pub fn as_slice(&self) -> &[Point] {
        &self.pts[..self.len as usize]
    }

    pub fn dim(&self) -> usize {
        self.len as usize - 1
    }
}

impl std::ops::Deref for SimplexPoints {
    type Target = [Point];
    fn deref(&self) -> &[Point] {
        self.as_slice()
    }
}

/// A ball given by its center and diameter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ball {
    pub center: Point,
    pub diameter: f64,
}

impl Ball {
    pub fn radius(&self) -> f64 {
        self.diameter * 0.5
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        self.center.dist(p) <= self.radius() + tol
    }

    /// Lebesgue measure of the ball in the given dimension.
    pub fn measure(&self, dim: usize) -> f64 {
        ball_measure(dim, self.diameter)
    }
}

/// Volume of the unit-diameter ball scaled to `diameter`: c_pi(d) (diam/2)^d.
pub fn ball_measure(dim: usize, diameter: f64) -> f64 {
    unit_ball_constant(dim) * (diameter * 0.5).powi(dim as i32)
}

/// Measure of the unit ball: 2 in 1D, pi in 2D, 4pi/3 in 3D.
pub fn unit_ball_constant(dim: usize) -> f64 {
    match dim {
        1 => 2.0,
        2 => std::f64::consts::PI,
        3 => 4.0 * std::f64::consts::PI / 3.0,
        _ => panic!("unsupported dimension {dim}"),
    }
}

/// The enclosing-ball constant sqrt(2d/(d+1)): the diameter of the smallest
/// ball containing a compact set is at most this factor times the set diameter.
pub fn jung_constant(dim: usize) -> f64 {
    (2.0 * dim as f64 / (dim as f64 + 1.0)).sqrt()
}

/// Signed area of triangle (a, b, c); positive when counter-clockwise.
pub fn signed_area2(a: Point, b: Point, c: Point) -> f64 {
    0.5 * (b - a).cross2(c - a)
}

/// Signed volume of tetrahedron (a, b, c, d); positive for a right-handed cell.
pub fn signed_volume3(a: Point, b: Point, c: Point, d: Point) -> f64 {
    (b - a).dot((c - a).cross(d - a)) / 6.0
}

/// Unsigned d-measure of a simplex given its `dim + 1` vertices.
pub fn simplex_measure(dim: usize, v: &[Point]) -> f64 {
    match dim {
        2 => signed_area2(v[0], v[1], v[2]).abs(),
        3 => signed_volume3(v[0], v[1], v[2], v[3]).abs(),
        _ => panic!("unsupported dimension {dim}"),
    }
}

/// Maximum pairwise vertex distance; for a simplex this is the longest edge.
pub fn simplex_diameter(v: &[Point]) -> f64 {
    let mut best = 0.0f64;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            best = best.max(v[i].dist(v[j]));
        }
    }
    best
}

/// Measure of the facet opposite no particular vertex: edge length in 2D,
/// triangle area in 3D.
pub fn facet_measure(dim: usize, f: &[Point]) -> f64 {
    match dim {
        2 => f[0].dist(f[1]),
        3 => 0.5 * (f[1] - f[0]).cross(f[2] - f[0]).norm(),
        _ => panic!("unsupported dimension {dim}"),
    }
}

/// Barycentric coordinates of `p` with respect to the simplex `v`.
/// Returns `None` for a degenerate simplex. The first `dim + 1` entries sum to 1.
pub fn barycentric(dim: usize, v: &[Point], p: Point) -> Option<[f64; 4]> {
    match dim {
        2 => {
            let e1 = v[1] - v[0];
            let e2 = v[2] - v[0];
            let det = e1.cross2(e2);
            if det == 0.0 {
                return None;
            }
            let r = p - v[0];
            let s = r.cross2(e2) / det;
            let t = e1.cross2(r) / det;
            Some([1.0 - s - t, s, t, 0.0])
        }
        3 => {
            let e1 = v[1] - v[0];
            let e2 = v[2] - v[0];
            let e3 = v[3] - v[0];
            let det = e1.dot(e2.cross(e3));
            if det == 0.0 {
                return None;
            }
            let r = p - v[0];
            let s = r.dot(e2.cross(e3)) / det;
            let t = e1.dot(r.cross(e3)) / det;
            let u = e1.dot(e2.cross(r)) / det;
            Some([1.0 - s - t - u, s, t, u])
        }
        _ => panic!("unsupported dimension {dim}"),
    }
}

/// Whether `p` lies in the closed simplex, with a tolerance on the barycentric
/// coordinates (`tol` is an absolute barycentric slack, e.g. 1e-12).
pub fn point_in_simplex(dim: usize, v: &[Point], p: Point, tol: f64) -> bool {
    match barycentric(dim, v, p) {
        Some(b) => b[..dim + 1].iter().all(|&w| w >= -tol),
        None => false,
    }
}

/// Smallest barycentric coordinate of `p`; negative outside, positive inside.
pub fn min_barycentric(dim: usize, v: &[Point], p: Point) -> Option<f64> {
    barycentric(dim, v, p).map(|b| {
        b[..dim + 1].iter().fold(f64::INFINITY, |m, &w| m.min(w))
    })
}

fn ball_from_two(a: Point, b: Point) -> Ball {
    let center = (a + b) * 0.5;
    Ball { center, diameter: 2.0 * center.dist(a).max(center.dist(b)) }
}

/// Circumcenter of three points in their own plane (works in 2D and 3D).
fn circumball_three(a: Point, b: Point, c: Point) -> Option<Ball> {
    let ab = b - a;
    let ac = c - a;
    let g11 = ab.norm2();
    let g22 = ac.norm2();
    let g12 = ab.dot(ac);
    let det = g11 * g22 - g12 * g12; // = |ab x ac|^2
    if det <= 0.0 {
        return None;
    }
    let s = (g22 * (g11 - g12)) / (2.0 * det);
    let t = (g11 * (g22 - g12)) / (2.0 * det);
    let center = a + ab * s + ac * t;
    let r = center.dist(a).max(center.dist(b)).max(center.dist(c));
    Some(Ball { center, diameter: 2.0 * r })
}

/// Circumsphere of four points in 3D.
fn circumball_four(v: &[Point]) -> Option<Ball> {
    // Solve 2 (v_i - v_0) . x = |v_i|^2 - |v_0|^2, i = 1..3, by Cramer's rule.
    let rows = [v[1] - v[0], v[2] - v[0], v[3] - v[0]];
    let rhs = [
        0.5 * (v[1].norm2() - v[0].norm2()),
        0.5 * (v[2].norm2() - v[0].norm2()),
        0.5 * (v[3].norm2() - v[0].norm2()),
    ];
    let det = rows[0].dot(rows[1].cross(rows[2]));
    if det == 0.0 {
        return None;
    }
    // Cramer by column replacement.
    let m = |col: usize| {
        let pick = |r: Point, rhs_r: f64| {
            let mut p = r;
            p.set_coord(col, rhs_r);
            p
        };
        pick(rows[0], rhs[0]).dot(pick(rows[1], rhs[1]).cross(pick(rows[2], rhs[2])))
    };
    let center = Point::new3(m(0) / det, m(1) / det, m(2) / det);
    let r = v.iter().map(|&p| center.dist(p)).fold(0.0f64, f64::max);
    Some(Ball { center, diameter: 2.0 * r })
}

/// Minimum enclosing ball of the vertices of a simplex (at most 4 points).
///
/// Exhaustive over boundary subsets: the optimum for <= 4 points is either a
/// two-point diametral ball, a triangle circumball, or (3D) the circumsphere.
pub fn min_enclosing_ball(dim: usize, v: &[Point]) -> Ball {
    let scale = simplex_diameter(v);
    let tol = 1e-12 * scale;
    let mut best: Option<Ball> = None;
    let mut consider = |ball: Option<Ball>| {
        if let Some(b) = ball {
            if v.iter().all(|&p| b.contains(p, tol))
                && best.map_or(true, |cur| b.diameter < cur.diameter)
            {
                best = Some(b);
            }
        }
    };
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            consider(Some(ball_from_two(v[i], v[j])));
        }
    }
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            for k in j + 1..v.len() {
                consider(circumball_three(v[i], v[j], v[k]));
            }
        }
    }
    if dim == 3 && v.len() == 4 {
        consider(circumball_four(v));
    }
    best.expect("non-degenerate simplex has an enclosing ball")
}

/// Largest ball inscribed in the simplex: radius d |e| / sum of facet measures,
/// centered at the facet-measure-weighted average of the opposite vertices.
pub fn inscribed_ball(dim: usize, v: &[Point]) -> Ball {
    let measure = simplex_measure(dim, v);
    let mut weight_sum = 0.0;
    let mut center = Point::ZERO;
    for i in 0..v.len() {
        let facet: Vec<Point> = (0..v.len()).filter(|&j| j != i).map(|j| v[j]).collect();
        let w = facet_measure(dim, &facet);
        weight_sum += w;
        center = center + v[i] * w;
    }
    let r = dim as f64 * measure / weight_sum;
    Ball { center: center / weight_sum, diameter: 2.0 * r }
}

fn dist_point_segment(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let denom = ab.norm2();
    if denom == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(ab) / denom).clamp(0.0, 1.0);
    p.dist(a + ab * t)
}

/// Closest distance from `p` to the (solid) triangle (a, b, c) in 3D.
fn dist_point_triangle3(p: Point, a: Point, b: Point, c: Point) -> f64 {
    let ab = b - a;
    let ac = c - a;
    let n = ab.cross(ac);
    let nn = n.norm2();
    if nn == 0.0 {
        return dist_point_segment(p, a, b)
            .min(dist_point_segment(p, b, c))
            .min(dist_point_segment(p, c, a));
    }
    // Project p onto the plane and test its barycentric coordinates there.
    let ap = p - a;
    let s = ap.cross(ac).dot(n) / nn;
    let t = ab.cross(ap).dot(n) / nn;
    if s >= 0.0 && t >= 0.0 && s + t <= 1.0 {
        return (ap.dot(n)).abs() / nn.sqrt();
    }
    dist_point_segment(p, a, b)
        .min(dist_point_segment(p, b, c))
        .min(dist_point_segment(p, c, a))
}

/// Exact distance from a point to a closed simplex (0 inside).
pub fn dist_point_simplex(dim: usize, v: &[Point], p: Point) -> f64 {
    if point_in_simplex(dim, v, p, 0.0) {
        return 0.0;
    }
    match dim {
        2 => dist_point_segment(p, v[0], v[1])
            .min(dist_point_segment(p, v[1], v[2]))
            .min(dist_point_segment(p, v[2], v[0])),
        3 => dist_point_triangle3(p, v[0], v[1], v[2])
            .min(dist_point_triangle3(p, v[0], v[1], v[3]))
            .min(dist_point_triangle3(p, v[0], v[2], v[3]))
            .min(dist_point_triangle3(p, v[1], v[2], v[3])),
        _ => panic!("unsupported dimension {dim}"),
    }
}

/// Exact maximum pairwise distance of a point set.
///
/// Grid-accelerated branch and bound: cells are compared through their tight
/// bounding boxes and pruned against the best pair found so far, so large
/// vertex sets avoid the quadratic scan.
pub fn max_pairwise_distance(pts: &[Point]) -> f64 {
    if pts.len() < 2 {
        return 0.0;
    }
    if pts.len() <= 256 {
        return simplex_diameter(pts);
    }

    let (lo, hi) = bounding_box(pts);
    let extent = (hi - lo).x.max((hi - lo).y).max((hi - lo).z).max(f64::MIN_POSITIVE);
    let res = 16usize;
    let cell = extent / res as f64;
    let key = |p: Point| -> (usize, usize, usize) {
        let c = |v: f64, l: f64| (((v - l) / cell) as usize).min(res - 1);
        (c(p.x, lo.x), c(p.y, lo.y), c(p.z, lo.z))
    };
    let mut boxes: std::collections::BTreeMap<(usize, usize, usize), (Point, Point, Vec<u32>)> =
        std::collections::BTreeMap::new();
    for (i, &p) in pts.iter().enumerate() {
        let e = boxes.entry(key(p)).or_insert((p, p, Vec::new()));
        e.0.x = e.0.x.min(p.x);
        e.0.y = e.0.y.min(p.y);
        e.0.z = e.0.z.min(p.z);
        e.1.x = e.1.x.max(p.x);
        e.1.y = e.1.y.max(p.y);
        e.1.z = e.1.z.max(p.z);
        e.2.push(i as u32);
    }
    let groups: Vec<(Point, Point, Vec<u32>)> = boxes.into_values().collect();

    let box_max_dist = |a: &(Point, Point, Vec<u32>), b: &(Point, Point, Vec<u32>)| -> f64 {
        let mut s = 0.0;
        for axis in 0..3 {
            let d = (b.1.coord(axis) - a.0.coord(axis))
                .abs()
                .max((a.1.coord(axis) - b.0.coord(axis)).abs());
            s += d * d;
        }
        s.sqrt()
    };

    let mut pairs: Vec<(f64, usize, usize)> = Vec::new();
    for i in 0..groups.len() {
        for j in i..groups.len() {
            pairs.push((box_max_dist(&groups[i], &groups[j]), i, j));
        }
    }
    pairs.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());

    let mut best = 0.0f64;
    for (ub, i, j) in pairs {
        if ub <= best {
            break;
        }
        for &a in &groups[i].2 {
            for &b in &groups[j].2 {
                best = best.max(pts[a as usize].dist(pts[b as usize]));
            }
        }
    }
    best
}

/// Componentwise bounding box of a point set.
pub fn bounding_box(pts: &[Point]) -> (Point, Point) {
    let mut lo = Point::new3(f64::INFINITY, f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new3(f64::NEG_INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in pts {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        lo.z = lo.z.min(p.z);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
        hi.z = hi.z.max(p.z);
    }
    (lo, hi)
}

/// Kahan-Neumaier compensated accumulator for long measure sums.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn tri(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> Vec<Point> {
        vec![Point::new2(a.0, a.1), Point::new2(b.0, b.1), Point::new2(c.0, c.1)]
    }

    fn corner_tet() -> Vec<Point> {
        vec![
            Point::new3(0.0, 0.0, 0.0),
            Point::new3(1.0, 0.0, 0.0),
            Point::new3(0.0, 1.0, 0.0),
            Point::new3(0.0, 0.0, 1.0),
        ]
    }

    #[test]
    fn measure_of_reference_cells() {
        assert_relative_eq!(simplex_measure(2, &tri((0., 0.), (1., 0.), (0., 1.))), 0.5);
        assert_relative_eq!(simplex_measure(3, &corner_tet()), 1.0 / 6.0);
        assert_eq!(simplex_measure(2, &tri((0., 0.), (1., 1.), (2., 2.))), 0.0);
    }

    #[test]
    fn diameter_of_reference_cells() {
        let eq = tri((0., 0.), (1., 0.), (0.5, 3f64.sqrt() / 2.0));
        assert_relative_eq!(simplex_diameter(&eq), 1.0, epsilon = 1e-15);
        let right = tri((0., 0.), (3., 0.), (0., 4.));
        assert_relative_eq!(simplex_diameter(&right), 5.0);
        assert_relative_eq!(simplex_diameter(&corner_tet()), 2f64.sqrt());
    }

    #[test]
    fn enclosing_ball_equilateral() {
        let eq = tri((0., 0.), (1., 0.), (0.5, 3f64.sqrt() / 2.0));
        let b = min_enclosing_ball(2, &eq);
        assert_relative_eq!(b.diameter, 2.0 / 3f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn enclosing_ball_obtuse_is_diametral() {
        // Obtuse triangle: the enclosing ball is spanned by the long edge, not
        // the circumcircle. Verified against the grid-search oracle below.
        let t = tri((0., 0.), (4., 0.), (1., 0.5));
        let b = min_enclosing_ball(2, &t);
        assert_relative_eq!(b.diameter, 4.0, epsilon = 1e-12);
        assert_relative_eq!(b.center.x, 2.0, epsilon = 1e-12);
        assert_relative_eq!(b.center.y, 0.0, epsilon = 1e-12);

        let oracle = grid_search_enclosing_radius(&t);
        assert_relative_eq!(b.radius(), oracle, epsilon = 2e-4);
    }

    /// Brute-force oracle: scan candidate centers on a fine grid and take the
    /// smallest max-distance-to-vertices. Independent of the kernel above.
    fn grid_search_enclosing_radius(v: &[Point]) -> f64 {
        let (lo, hi) = bounding_box(v);
        let n = 400;
        let mut best = f64::INFINITY;
        for i in 0..=n {
            for j in 0..=n {
                let c = Point::new2(
                    lo.x + (hi.x - lo.x) * i as f64 / n as f64,
                    lo.y + (hi.y - lo.y) * j as f64 / n as f64,
                );
                let r = v.iter().map(|&p| c.dist(p)).fold(0.0f64, f64::max);
                best = best.min(r);
            }
        }
        best
    }

    #[test]
    fn inscribed_ball_right_triangle() {
        let b = inscribed_ball(2, &tri((0., 0.), (3., 0.), (0., 4.)));
        assert_relative_eq!(b.radius(), 1.0, epsilon = 1e-12);
        assert_relative_eq!(b.center.x, 1.0, epsilon = 1e-12);
        assert_relative_eq!(b.center.y, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn inscribed_ball_equilateral() {
        let eq = tri((0., 0.), (1., 0.), (0.5, 3f64.sqrt() / 2.0));
        let b = inscribed_ball(2, &eq);
        assert_relative_eq!(b.diameter, 1.0 / 3f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn inscribed_ball_corner_tet() {
        // r = d |e| / sum |facets|, facets recomputed here independently.
        let v = corner_tet();
        let b = inscribed_ball(3, &v);
        // three unit right-triangle facets plus the equilateral facet of side sqrt(2)
        let facet_sum = 3.0 * 0.5 + 3f64.sqrt() / 4.0 * 2.0;
        let expected = 3.0 * (1.0 / 6.0) / facet_sum;
        assert_relative_eq!(b.radius(), expected, epsilon = 1e-12);
        assert_relative_eq!(b.radius(), 0.2113248654, epsilon = 1e-9);
    }

    #[test]
    fn ball_measures() {
        assert_relative_eq!(ball_measure(2, 2.0), std::f64::consts::PI);
        assert_relative_eq!(ball_measure(3, 2.0), 4.0 * std::f64::consts::PI / 3.0);
        assert_relative_eq!(ball_measure(1, 3.0), 3.0);
    }

    #[test]
    fn barycentric_roundtrip() {
        let v = corner_tet();
        let p = Point::new3(0.1, 0.2, 0.3);
        let b = barycentric(3, &v, p).unwrap();
        let q = v[0] * b[0] + v[1] * b[1] + v[2] * b[2] + v[3] * b[3];
        assert_relative_eq!(p.dist(q), 0.0, epsilon = 1e-14);
        assert!(point_in_simplex(3, &v, p, 0.0));
        assert!(!point_in_simplex(3, &v, Point::new3(0.5, 0.5, 0.5), 1e-9));
    }

    #[test]
    fn distance_to_simplex() {
        let t = tri((0., 0.), (1., 0.), (0., 1.));
        assert_eq!(dist_point_simplex(2, &t, Point::new2(0.2, 0.2)), 0.0);
        assert_relative_eq!(dist_point_simplex(2, &t, Point::new2(-1.0, 0.0)), 1.0);
        assert_relative_eq!(
            dist_point_simplex(2, &t, Point::new2(1.0, 1.0)),
            2f64.sqrt() / 2.0,
            epsilon = 1e-12
        );
        let v = corner_tet();
        assert_relative_eq!(dist_point_simplex(3, &v, Point::new3(-2.0, 0.0, 0.0)), 2.0);
        assert_relative_eq!(
            dist_point_simplex(3, &v, Point::new3(1.0, 1.0, 1.0)),
            ((1.0f64 - 1.0 / 3.0).powi(2) * 3.0).sqrt(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn max_pairwise_matches_brute_force() {
        let mut pts = Vec::new();
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..3000 {
            pts.push(Point::new3(next(), next() * 2.0, next() * 0.5));
        }
        let exact = max_pairwise_distance(&pts);
        let mut brute = 0.0f64;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                brute = brute.max(pts[i].dist(pts[j]));
            }
        }
        assert_eq!(exact, brute);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut s = CompensatedSum::default();
        s.add(1e16);
        for _ in 0..1000 {
            s.add(1.0);
        }
        s.add(-1e16);
        assert_relative_eq!(s.value(), 1000.0);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn random_simplex(dim: usize) -> impl Strategy<Value = Vec<Point>> {
            let coord = -10.0..10.0f64;
            proptest::collection::vec((coord.clone(), coord.clone(), coord), dim + 1).prop_map(
                move |pts| {
                    pts.into_iter()
                        .map(|(x, y, z)| {
                            if dim == 2 {
                                Point::new2(x, y)
                            } else {
                                Point::new3(x, y, z)
                            }
                        })
                        .collect()
                },
            )
        }

        fn non_degenerate(dim: usize, v: &[Point]) -> bool {
            simplex_measure(dim, v) > 1e-3
        }

        proptest! {
            #[test]
            fn jung_bound_holds_2d(v in random_simplex(2)) {
                prop_assume!(non_degenerate(2, &v));
                let b = min_enclosing_ball(2, &v);
                let lim = jung_constant(2) * simplex_diameter(&v);
                prop_assert!(b.diameter <= lim * (1.0 + 1e-12));
            }

            #[test]
            fn jung_bound_holds_3d(v in random_simplex(3)) {
                prop_assume!(non_degenerate(3, &v));
                let b = min_enclosing_ball(3, &v);
                let lim = jung_constant(3) * simplex_diameter(&v);
                prop_assert!(b.diameter <= lim * (1.0 + 1e-12));
            }

            #[test]
            fn inscribed_inside_enclosing(v in random_simplex(3)) {
                prop_assume!(non_degenerate(3, &v));
                let inner = inscribed_ball(3, &v);
                let outer = min_enclosing_ball(3, &v);
                prop_assert!(inner.diameter <= outer.diameter * (1.0 + 1e-12));
                // measure sandwich: |ball_in| <= |e| <= |ball_out|
                let m = simplex_measure(3, &v);
                prop_assert!(inner.measure(3) <= m * (1.0 + 1e-9));
                prop_assert!(m <= outer.measure(3) * (1.0 + 1e-9));
                // the inscribed center is strictly interior
                let b = min_barycentric(3, &v, inner.center).unwrap();
                prop_assert!(b > 0.0);
            }

            #[test]
            fn enclosing_ball_contains_vertices(v in random_simplex(2)) {
                prop_assume!(non_degenerate(2, &v));
                let b = min_enclosing_ball(2, &v);
                let tol = 1e-10 * simplex_diameter(&v);
                for &p in &v {
                    prop_assert!(b.contains(p, tol));
                }
            }
        }
    }
}
