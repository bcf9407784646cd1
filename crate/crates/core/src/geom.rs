//! Exact integer geometry predicates for lattice polygons.

pub(crate) type Point = (i64, i64);

/// Twice the signed area of triangle abc; > 0 iff counter-clockwise.
pub(crate) fn orient(a: Point, b: Point, c: Point) -> i64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

/// p lies on the closed segment [a, b].
pub(crate) fn on_segment(p: Point, a: Point, b: Point) -> bool {
    orient(a, b, p) == 0
        && p.0 >= a.0.min(b.0)
        && p.0 <= a.0.max(b.0)
        && p.1 >= a.1.min(b.1)
        && p.1 <= a.1.max(b.1)
}

/// p lies strictly inside the open segment (a, b).
pub(crate) fn strictly_between(p: Point, a: Point, b: Point) -> bool {
    p != a && p != b && on_segment(p, a, b)
}

/// Closed segments [p1,p2] and [p3,p4] share at least one point.
pub(crate) fn segments_intersect(p1: Point, p2: Point, p3: Point, p4: Point) -> bool {
    let d1 = orient(p3, p4, p1);
    let d2 = orient(p3, p4, p2);
    let d3 = orient(p1, p2, p3);
    let d4 = orient(p1, p2, p4);
    if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)) {
        return true;
    }
    (d1 == 0 && on_segment(p1, p3, p4))
        || (d2 == 0 && on_segment(p2, p3, p4))
        || (d3 == 0 && on_segment(p3, p1, p2))
        || (d4 == 0 && on_segment(p4, p1, p2))
}

/// The two segments overlap in more than a shared endpoint.
pub(crate) fn segments_share_interior(p1: Point, p2: Point, p3: Point, p4: Point) -> bool {
    let d1 = orient(p3, p4, p1);
    let d2 = orient(p3, p4, p2);
    let d3 = orient(p1, p2, p3);
    let d4 = orient(p1, p2, p4);
    if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)) {
        return true;
    }
    strictly_between(p1, p3, p4)
        || strictly_between(p2, p3, p4)
        || strictly_between(p3, p1, p2)
        || strictly_between(p4, p1, p2)
}

/// Strict interior test via crossing number. `p` must not lie on the boundary.
pub(crate) fn point_in_polygon(p: Point, poly: &[Point]) -> bool {
    let mut inside = false;
    let n = poly.len();
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        if a.1 <= p.1 && p.1 < b.1 && orient(a, b, p) > 0 {
            inside = !inside;
        } else if b.1 <= p.1 && p.1 < a.1 && orient(a, b, p) < 0 {
            inside = !inside;
        }
    }
    inside
}

/// v inside the closed triangle (t1,t2,t3), corners included.
/// The triangle must be counter-clockwise.
pub(crate) fn in_closed_triangle(v: Point, t1: Point, t2: Point, t3: Point) -> bool {
    orient(t1, t2, v) >= 0 && orient(t2, t3, v) >= 0 && orient(t3, t1, v) >= 0
}

/// Twice the signed area of a closed polygon walk.
pub(crate) fn signed_area_x2(poly: &[Point]) -> i64 {
    let n = poly.len();
    let mut s = 0;
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        s += a.0 * b.1 - b.0 * a.1;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_signs() {
        assert!(orient((0, 0), (1, 0), (0, 1)) > 0);
        assert!(orient((0, 0), (0, 1), (1, 0)) < 0);
        assert_eq!(orient((0, 0), (1, 1), (2, 2)), 0);
    }

    #[test]
    fn segment_predicates() {
        assert!(on_segment((1, 1), (0, 0), (2, 2)));
        assert!(strictly_between((1, 0), (0, 0), (2, 0)));
        assert!(!strictly_between((0, 0), (0, 0), (2, 0)));
        assert!(segments_intersect((0, 0), (2, 2), (0, 2), (2, 0)));
        assert!(!segments_intersect((0, 0), (1, 0), (0, 1), (1, 1)));
        // sharing an endpoint is not interior sharing
        assert!(!segments_share_interior((0, 0), (1, 1), (1, 1), (2, 0)));
        // collinear overlap is
        assert!(segments_share_interior((0, 0), (2, 0), (1, 0), (3, 0)));
    }

    #[test]
    fn polygon_interior() {
        let square = [(0, 0), (2, 0), (2, 2), (0, 2)];
        assert!(point_in_polygon((1, 1), &square));
        assert!(!point_in_polygon((3, 1), &square));
        assert_eq!(signed_area_x2(&square), 8);
    }
}
