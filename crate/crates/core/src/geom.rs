//! Exact geometric primitives over arbitrary-precision rationals.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` with `q > 0`; reducible fractions are canonicalized.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("malformed rational {s:?}"));
    let int = |t: &str| -> Result<BigInt> {
        let t = t.trim();
        if t.is_empty() || t.starts_with('+') {
            return Err(bad());
        }
        BigInt::from_str(t).map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(int(s)?)),
        Some((p, q)) => {
            let p = int(p)?;
            let q = int(q)?;
            if !q.is_positive() {
                return Err(Error::Parse(format!(
                    "rational {s:?} must have a positive denominator"
                )));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Canonical `"p"` / `"p/q"` rendering.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(rat(x), rat(y))
    }

    /// Vector from `self` to `other`.
    pub fn to(&self, other: &Point) -> Vec2 {
        Vec2::new(&other.x - &self.x, &other.y - &self.y)
    }

    pub fn translate(&self, v: &Vec2) -> Point {
        Point::new(&self.x + &v.dx, &self.y + &v.dy)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            format_rational(&self.x),
            format_rational(&self.y)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vec2 {
    pub dx: Rational,
    pub dy: Rational,
}

impl Vec2 {
    pub fn new(dx: Rational, dy: Rational) -> Self {
        Vec2 { dx, dy }
    }

    pub fn from_ints(dx: i64, dy: i64) -> Self {
        Vec2::new(rat(dx), rat(dy))
    }

    pub fn is_zero(&self) -> bool {
        self.dx.is_zero() && self.dy.is_zero()
    }

    pub fn dot(&self, o: &Vec2) -> Rational {
        &self.dx * &o.dx + &self.dy * &o.dy
    }

    pub fn cross(&self, o: &Vec2) -> Rational {
        &self.dx * &o.dy - &self.dy * &o.dx
    }

    pub fn neg(&self) -> Vec2 {
        Vec2::new(-&self.dx, -&self.dy)
    }

    pub fn add(&self, o: &Vec2) -> Vec2 {
        Vec2::new(&self.dx + &o.dx, &self.dy + &o.dy)
    }

    pub fn scale(&self, s: &Rational) -> Vec2 {
        Vec2::new(&self.dx * s, &self.dy * s)
    }

    /// Counterclockwise rotation by a right angle.
    pub fn perp(&self) -> Vec2 {
        Vec2::new(-&self.dy, self.dx.clone())
    }

    /// Integer vector with the same direction, obtained by clearing denominators.
    pub fn to_integer_direction(&self) -> IVec {
        let l = self.dx.denom().lcm(self.dy.denom());
        IVec::new(
            self.dx.numer() * (&l / self.dx.denom()),
            self.dy.numer() * (&l / self.dy.denom()),
        )
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<{}, {}>",
            format_rational(&self.dx),
            format_rational(&self.dy)
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Cw,
    Collinear,
    Ccw,
}

impl Orientation {
    fn from_sign(s: &Rational) -> Self {
        if s.is_positive() {
            Orientation::Ccw
        } else if s.is_negative() {
            Orientation::Cw
        } else {
            Orientation::Collinear
        }
    }

    fn from_int_sign(s: &BigInt) -> Self {
        if s.is_positive() {
            Orientation::Ccw
        } else if s.is_negative() {
            Orientation::Cw
        } else {
            Orientation::Collinear
        }
    }

    pub fn reverse(self) -> Self {
        match self {
            Orientation::Cw => Orientation::Ccw,
            Orientation::Ccw => Orientation::Cw,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// Sign of `(q - p) x (r - p)`.
pub fn orient(p: &Point, q: &Point, r: &Point) -> Orientation {
    Orientation::from_sign(&p.to(q).cross(&p.to(r)))
}

/// Sign of `u . v` as -1, 0 or +1.
pub fn dot_sign(u: &Vec2, v: &Vec2) -> i32 {
    let d = u.dot(v);
    if d.is_positive() {
        1
    } else if d.is_negative() {
        -1
    } else {
        0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SegmentRelation {
    Disjoint,
    SharedEndpoint,
    Crossing,
    Overlapping,
    /// An endpoint of one segment lies in the relative interior of the other.
    Touching,
}

/// True when `p` lies strictly between `a` and `b` on segment `ab`.
pub fn in_open_segment(p: &Point, a: &Point, b: &Point) -> bool {
    orient(a, b, p) == Orientation::Collinear
        && a.to(p).dot(&a.to(b)).is_positive()
        && b.to(p).dot(&b.to(a)).is_positive()
}

pub fn segment_relation(s1: (&Point, &Point), s2: (&Point, &Point)) -> Result<SegmentRelation> {
    let (a, b) = s1;
    let (c, d) = s2;
    if a == b || c == d {
        return Err(Error::DegenerateSegment);
    }
    let shared = [(a, c), (a, d), (b, c), (b, d)]
        .iter()
        .filter(|(p, q)| p == q)
        .count();
    if shared == 2 {
        return Ok(SegmentRelation::Overlapping);
    }
    if shared == 1 {
        let (common, p, q) = if a == c {
            (a, b, d)
        } else if a == d {
            (a, b, c)
        } else if b == c {
            (b, a, d)
        } else {
            (b, a, c)
        };
        let u = common.to(p);
        let v = common.to(q);
        if u.cross(&v).is_zero() && u.dot(&v).is_positive() {
            return Ok(SegmentRelation::Overlapping);
        }
        return Ok(SegmentRelation::SharedEndpoint);
    }
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    use Orientation::Collinear;
    if o1 == Collinear && o2 == Collinear {
        // Collinear: compare the parameter intervals along ab.
        let dir = a.to(b);
        let t = |p: &Point| a.to(p).dot(&dir);
        let (s0, s1) = (Rational::zero(), dir.dot(&dir));
        let (mut t0, mut t1) = (t(c), t(d));
        if t0 > t1 {
            std::mem::swap(&mut t0, &mut t1);
        }
        let lo = if s0 > t0 { s0 } else { t0 };
        let hi = if s1 < t1 { s1 } else { t1 };
        return Ok(if lo < hi {
            SegmentRelation::Overlapping
        } else {
            SegmentRelation::Disjoint
        });
    }
    if o1 != Collinear && o2 != Collinear && o3 != Collinear && o4 != Collinear {
        return Ok(if o1 != o2 && o3 != o4 {
            SegmentRelation::Crossing
        } else {
            SegmentRelation::Disjoint
        });
    }
    if in_open_segment(c, a, b)
        || in_open_segment(d, a, b)
        || in_open_segment(a, c, d)
        || in_open_segment(b, c, d)
    {
        return Ok(SegmentRelation::Touching);
    }
    Ok(SegmentRelation::Disjoint)
}

/// Outcome of comparing an angle against `pi / 2^m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AngleVerdict {
    Less,
    Equal,
    NotLess,
}

/// Decides whether the angle `p-apex-q` is below `pi / 2^m`.
///
/// Right angles and `pi/4` are decided exactly; for `m >= 3` the tangent of the
/// angle is compared with a certified enclosure of `tan(pi/2^m)` whose
/// precision doubles until the comparison separates. `tan(pi/2^m)` is
/// irrational for `m >= 3`, so the refinement always terminates.
pub fn angle_less_than_dyadic(apex: &Point, p: &Point, q: &Point, m: u32) -> Result<AngleVerdict> {
    if m == 0 {
        return Err(Error::Precondition(
            "dyadic exponent must be positive".into(),
        ));
    }
    let a = apex.to(p);
    let b = apex.to(q);
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroVector);
    }
    let cross = a.cross(&b).abs();
    let dot = a.dot(&b);
    if cross.is_zero() {
        return Ok(if dot.is_positive() {
            AngleVerdict::Less
        } else {
            AngleVerdict::NotLess
        });
    }
    if m == 1 {
        return Ok(match dot.cmp(&Rational::zero()) {
            Ordering::Greater => AngleVerdict::Less,
            Ordering::Equal => AngleVerdict::Equal,
            Ordering::Less => AngleVerdict::NotLess,
        });
    }
    if !dot.is_positive() {
        return Ok(AngleVerdict::NotLess);
    }
    let tan = cross / dot;
    if m == 2 {
        return Ok(match tan.cmp(&Rational::one()) {
            Ordering::Less => AngleVerdict::Less,
            Ordering::Equal => AngleVerdict::Equal,
            Ordering::Greater => AngleVerdict::NotLess,
        });
    }
    let mut bits = 64;
    loop {
        let e = interval::tan_pi_over_pow2(m, bits);
        if tan < e.lo {
            return Ok(AngleVerdict::Less);
        }
        if tan > e.hi {
            return Ok(AngleVerdict::NotLess);
        }
        bits *= 2;
    }
}

/// The open half-plane `{p : a*p.x + b*p.y + c > 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPlane {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl HalfPlane {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(HalfPlane { a, b, c })
    }

    /// Open half-plane strictly to the left of the directed line `p -> q`.
    pub fn left_of(p: &Point, q: &Point) -> Result<Self> {
        let d = p.to(q);
        let a = -&d.dy;
        let b = d.dx.clone();
        let c = -(&a * &p.x + &b * &p.y);
        HalfPlane::new(a, b, c)
    }

    pub fn eval(&self, p: &Point) -> Rational {
        &self.a * &p.x + &self.b * &p.y + &self.c
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_positive()
    }

    fn line_intersection(&self, o: &HalfPlane) -> Option<Point> {
        let det = &self.a * &o.b - &self.b * &o.a;
        if det.is_zero() {
            return None;
        }
        let x = (&self.b * &o.c - &o.b * &self.c) / &det;
        let y = (&o.a * &self.c - &self.a * &o.c) / &det;
        Some(Point::new(x, y))
    }

    fn foot_from_origin(&self) -> Point {
        let n2 = &self.a * &self.a + &self.b * &self.b;
        Point::new(-&self.c * &self.a / &n2, -&self.c * &self.b / &n2)
    }
}

/// Clips a convex polygon by the closed half-plane `h >= 0`.
fn clip_closed(poly: &[Point], h: &HalfPlane) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(poly.len() + 1);
    for i in 0..poly.len() {
        let p = &poly[i];
        let q = &poly[(i + 1) % poly.len()];
        let fp = h.eval(p);
        let fq = h.eval(q);
        if !fp.is_negative() {
            out.push(p.clone());
        }
        if (fp.is_positive() && fq.is_negative()) || (fp.is_negative() && fq.is_positive()) {
            let t = &fp / (&fp - &fq);
            out.push(p.translate(&p.to(q).scale(&t)));
        }
    }
    out.dedup();
    while out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// A point strictly inside every open half-plane, or `None` if the
/// intersection is empty.
///
/// The closed constraints are clipped against a box large enough to contain
/// every pairwise boundary intersection and a point of every boundary line, so
/// a nonempty open intersection always meets the box interior. The vertex
/// centroid of the clipped polygon is then interior whenever the polygon has
/// nonempty interior.
pub fn halfplane_intersection_witness(hs: &[HalfPlane]) -> Option<Point> {
    assert!(!hs.is_empty(), "empty half-plane list");
    let mut bound = Rational::one();
    let mut grow = |p: &Point| {
        for v in [&p.x, &p.y] {
            let a = v.abs() + Rational::one();
            if a > bound {
                bound = a;
            }
        }
    };
    for (i, h) in hs.iter().enumerate() {
        grow(&h.foot_from_origin());
        for o in &hs[i + 1..] {
            if let Some(p) = h.line_intersection(o) {
                grow(&p);
            }
        }
    }
    let nb = -bound.clone();
    let mut poly = vec![
        Point::new(nb.clone(), nb.clone()),
        Point::new(bound.clone(), nb.clone()),
        Point::new(bound.clone(), bound.clone()),
        Point::new(nb, bound),
    ];
    for h in hs {
        poly = clip_closed(&poly, h);
        if poly.len() < 3 {
            return None;
        }
    }
    let k = rat(poly.len() as i64);
    let mut sx = Rational::zero();
    let mut sy = Rational::zero();
    for p in &poly {
        sx += &p.x;
        sy += &p.y;
    }
    let c = Point::new(sx / &k, sy / &k);
    hs.iter().all(|h| h.contains(&c)).then_some(c)
}

/// Twice the signed area of a polygon given by its vertex cycle.
pub fn signed_area2(poly: &[&Point]) -> Rational {
    let mut s = Rational::zero();
    for i in 0..poly.len() {
        let p = poly[i];
        let q = poly[(i + 1) % poly.len()];
        s += &p.x * &q.y - &q.x * &p.y;
    }
    s
}

/// Integer vector used by the hot loops once denominators are cleared.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IVec {
    pub x: BigInt,
    pub y: BigInt,
}

impl IVec {
    pub fn new(x: BigInt, y: BigInt) -> Self {
        IVec { x, y }
    }

    pub fn sub(&self, o: &IVec) -> IVec {
        IVec::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn dot(&self, o: &IVec) -> BigInt {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn cross(&self, o: &IVec) -> BigInt {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn neg(&self) -> IVec {
        IVec::new(-&self.x, -&self.y)
    }

    pub fn perp(&self) -> IVec {
        IVec::new(-&self.y, self.x.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// 0 for directions in `[0, pi)`, 1 for `[pi, 2pi)`.
    fn half(&self) -> u8 {
        if self.y.is_positive() || (self.y.is_zero() && self.x.is_positive()) {
            0
        } else {
            1
        }
    }

    /// Counterclockwise angular order starting at the positive x-axis.
    pub fn angle_cmp(&self, o: &IVec) -> Ordering {
        self.half().cmp(&o.half()).then_with(|| {
            let c = self.cross(o);
            if c.is_positive() {
                Ordering::Less
            } else if c.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        })
    }

    pub fn to_vec2(&self) -> Vec2 {
        Vec2::new(
            Rational::from_integer(self.x.clone()),
            Rational::from_integer(self.y.clone()),
        )
    }
}

/// Point coordinates scaled by a common denominator so that all predicates
/// run on integers.
#[derive(Clone, Debug)]
pub struct IntFrame {
    pub pts: Vec<IVec>,
}

impl IntFrame {
    pub fn new(points: &[Point]) -> Self {
        let mut l = BigInt::one();
        for p in points {
            l = l.lcm(p.x.denom()).lcm(p.y.denom());
        }
        let pts = points
            .iter()
            .map(|p| {
                IVec::new(
                    p.x.numer() * (&l / p.x.denom()),
                    p.y.numer() * (&l / p.y.denom()),
                )
            })
            .collect();
        IntFrame { pts }
    }

    pub fn vec(&self, from: usize, to: usize) -> IVec {
        self.pts[to].sub(&self.pts[from])
    }

    pub fn orient(&self, p: usize, q: usize, r: usize) -> Orientation {
        Orientation::from_int_sign(&self.vec(p, q).cross(&self.vec(p, r)))
    }

    pub fn in_open_segment(&self, p: usize, a: usize, b: usize) -> bool {
        let ab = self.vec(a, b);
        let ap = self.vec(a, p);
        ab.cross(&ap).is_zero()
            && ap.dot(&ab).is_positive()
            && self.vec(b, p).dot(&ab).is_negative()
    }

    /// Relation between segments given by vertex indices (endpoints distinct
    /// and coordinates pairwise distinct).
    pub fn segment_relation(&self, s1: (usize, usize), s2: (usize, usize)) -> SegmentRelation {
        let (a, b) = s1;
        let (c, d) = s2;
        let shared = [(a, c), (a, d), (b, c), (b, d)]
            .iter()
            .filter(|(p, q)| p == q)
            .count();
        if shared == 2 {
            return SegmentRelation::Overlapping;
        }
        if shared == 1 {
            let (common, p, q) = if a == c {
                (a, b, d)
            } else if a == d {
                (a, b, c)
            } else if b == c {
                (b, a, d)
            } else {
                (b, a, c)
            };
            let u = self.vec(common, p);
            let v = self.vec(common, q);
            if u.cross(&v).is_zero() && u.dot(&v).is_positive() {
                return SegmentRelation::Overlapping;
            }
            return SegmentRelation::SharedEndpoint;
        }
        let o1 = self.orient(a, b, c);
        let o2 = self.orient(a, b, d);
        let o3 = self.orient(c, d, a);
        let o4 = self.orient(c, d, b);
        use Orientation::Collinear;
        if o1 == Collinear && o2 == Collinear {
            let dir = self.vec(a, b);
            let s1 = dir.dot(&dir);
            let mut t0 = self.vec(a, c).dot(&dir);
            let mut t1 = self.vec(a, d).dot(&dir);
            if t0 > t1 {
                std::mem::swap(&mut t0, &mut t1);
            }
            let lo = if t0 > BigInt::zero() {
                t0
            } else {
                BigInt::zero()
            };
            let hi = if t1 < s1 { t1 } else { s1 };
            return if lo < hi {
                SegmentRelation::Overlapping
            } else {
                SegmentRelation::Disjoint
            };
        }
        if o1 != Collinear && o2 != Collinear && o3 != Collinear && o4 != Collinear {
            return if o1 != o2 && o3 != o4 {
                SegmentRelation::Crossing
            } else {
                SegmentRelation::Disjoint
            };
        }
        if self.in_open_segment(c, a, b)
            || self.in_open_segment(d, a, b)
            || self.in_open_segment(a, c, d)
            || self.in_open_segment(b, c, d)
        {
            return SegmentRelation::Touching;
        }
        SegmentRelation::Disjoint
    }
}

/// Half-plane shorthand used by tests and oracles: `a x + b y + c > 0` from integers.
pub fn halfplane_i(a: i64, b: i64, c: i64) -> HalfPlane {
    HalfPlane::new(rat(a), rat(b), rat(c)).expect("nonzero normal")
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [format_rational(&self.x), format_rational(&self.y)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [x, y] = <[String; 2]>::deserialize(d)?;
        let px = parse_rational(&x).map_err(serde::de::Error::custom)?;
        let py = parse_rational(&y).map_err(serde::de::Error::custom)?;
        Ok(Point::new(px, py))
    }
}
