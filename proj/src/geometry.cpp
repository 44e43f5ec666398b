#include "tspsurf/geometry.hpp"

#include <cmath>
#include <cstdint>

namespace tspsurf {

namespace {

constexpr double kDblEps = 2.220446049250313e-16;  // 2^-52
constexpr long double kLdEps = 1.0842021724855044e-19L; // 2^-63

inline bool integral_in(double v, double bound) {
  return std::nearbyint(v) == v && std::fabs(v) < bound;
}

inline int sign_of(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

} // namespace

int orient2d(const Point& a, const Point& b, const Point& c) {
  const double acx = a.x - c.x, acy = a.y - c.y;
  const double bcx = b.x - c.x, bcy = b.y - c.y;
  const double det = acx * bcy - acy * bcx;
  const double detsum = std::fabs(acx * bcy) + std::fabs(acy * bcx);
  if (std::fabs(det) > 4.0 * kDblEps * detsum) return det > 0 ? 1 : -1;

  // Exact when all inputs are integers below 2^30: products fit in 128 bits.
  const double bound = 1073741824.0; // 2^30
  if (integral_in(a.x, bound) && integral_in(a.y, bound) &&
      integral_in(b.x, bound) && integral_in(b.y, bound) &&
      integral_in(c.x, bound) && integral_in(c.y, bound)) {
    __int128 iacx = (__int128)(long long)(a.x - c.x);
    __int128 iacy = (__int128)(long long)(a.y - c.y);
    __int128 ibcx = (__int128)(long long)(b.x - c.x);
    __int128 ibcy = (__int128)(long long)(b.y - c.y);
    return sign_of(iacx * ibcy - iacy * ibcx);
  }

  const long double lacx = (long double)a.x - c.x, lacy = (long double)a.y - c.y;
  const long double lbcx = (long double)b.x - c.x, lbcy = (long double)b.y - c.y;
  const long double ldet = lacx * lbcy - lacy * lbcx;
  const long double ldetsum = std::fabs((double)(lacx * lbcy)) +
                              std::fabs((double)(lacy * lbcx));
  if (std::fabs((double)ldet) > 4.0L * kLdEps * ldetsum)
    return ldet > 0 ? 1 : -1;
  return 0;
}

int incircle(const Point& a, const Point& b, const Point& c, const Point& p) {
  const double adx = a.x - p.x, ady = a.y - p.y;
  const double bdx = b.x - p.x, bdy = b.y - p.y;
  const double cdx = c.x - p.x, cdy = c.y - p.y;

  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;

  const double bcdet = bdx * cdy - bdy * cdx;
  const double cadet = cdx * ady - cdy * adx;
  const double abdet = adx * bdy - ady * bdx;
  const double det = alift * bcdet + blift * cadet + clift * abdet;

  const double permanent = alift * (std::fabs(bdx * cdy) + std::fabs(bdy * cdx)) +
                           blift * (std::fabs(cdx * ady) + std::fabs(cdy * adx)) +
                           clift * (std::fabs(adx * bdy) + std::fabs(ady * bdx));
  if (std::fabs(det) > 16.0 * kDblEps * permanent) return det > 0 ? 1 : -1;

  // Exact path: coordinates integral below 2^20 keep the 4x4 determinant
  // terms within 2^84, far inside __int128 range.
  const double bound = 1048576.0; // 2^20
  bool all_int = integral_in(a.x, bound) && integral_in(a.y, bound) &&
                 integral_in(b.x, bound) && integral_in(b.y, bound) &&
                 integral_in(c.x, bound) && integral_in(c.y, bound) &&
                 integral_in(p.x, bound) && integral_in(p.y, bound);
  if (all_int) {
    __int128 iadx = (long long)(a.x - p.x), iady = (long long)(a.y - p.y);
    __int128 ibdx = (long long)(b.x - p.x), ibdy = (long long)(b.y - p.y);
    __int128 icdx = (long long)(c.x - p.x), icdy = (long long)(c.y - p.y);
    __int128 ial = iadx * iadx + iady * iady;
    __int128 ibl = ibdx * ibdx + ibdy * ibdy;
    __int128 icl = icdx * icdx + icdy * icdy;
    __int128 idet = ial * (ibdx * icdy - ibdy * icdx) +
                    ibl * (icdx * iady - icdy * iadx) +
                    icl * (iadx * ibdy - iady * ibdx);
    return sign_of(idet);
  }

  const long double ladx = (long double)a.x - p.x, lady = (long double)a.y - p.y;
  const long double lbdx = (long double)b.x - p.x, lbdy = (long double)b.y - p.y;
  const long double lcdx = (long double)c.x - p.x, lcdy = (long double)c.y - p.y;
  const long double lal = ladx * ladx + lady * lady;
  const long double lbl = lbdx * lbdx + lbdy * lbdy;
  const long double lcl = lcdx * lcdx + lcdy * lcdy;
  const long double ldet = lal * (lbdx * lcdy - lbdy * lcdx) +
                           lbl * (lcdx * lady - lcdy * ladx) +
                           lcl * (ladx * lbdy - lady * lbdx);
  const long double lperm =
      lal * (std::fabs((double)(lbdx * lcdy)) + std::fabs((double)(lbdy * lcdx))) +
      lbl * (std::fabs((double)(lcdx * lady)) + std::fabs((double)(lcdy * ladx))) +
      lcl * (std::fabs((double)(ladx * lbdy)) + std::fabs((double)(lady * lbdx)));
  if (std::fabs((double)ldet) > 16.0L * kLdEps * lperm)
    return ldet > 0 ? 1 : -1;
  return 0;
}

namespace {

// 1D overlap test for collinear segments using the dominant axis.
bool collinear_overlap(const Point& p, const Point& q, const Point& r,
                       const Point& s) {
  auto lo = [](double a, double b) { return a < b ? a : b; };
  auto hi = [](double a, double b) { return a > b ? a : b; };
  bool use_x = std::fabs(q.x - p.x) + std::fabs(s.x - r.x) >=
               std::fabs(q.y - p.y) + std::fabs(s.y - r.y);
  double a1 = use_x ? lo(p.x, q.x) : lo(p.y, q.y);
  double a2 = use_x ? hi(p.x, q.x) : hi(p.y, q.y);
  double b1 = use_x ? lo(r.x, s.x) : lo(r.y, s.y);
  double b2 = use_x ? hi(r.x, s.x) : hi(r.y, s.y);
  return hi(a1, b1) < lo(a2, b2); // overlap of positive length
}

bool same_point(const Point& a, const Point& b) {
  return a.x == b.x && a.y == b.y;
}

bool on_closed_segment(const Point& p, const Point& q, const Point& x) {
  // Pre: p, q, x collinear.
  return x.x >= std::min(p.x, q.x) && x.x <= std::max(p.x, q.x) &&
         x.y >= std::min(p.y, q.y) && x.y <= std::max(p.y, q.y);
}

} // namespace

bool segments_conflict(const Point& p, const Point& q, const Point& r,
                       const Point& s) {
  int shared = (same_point(p, r) || same_point(p, s) ? 1 : 0) +
               (same_point(q, r) || same_point(q, s) ? 1 : 0);
  if (shared >= 2) return true; // identical segment
  int o1 = orient2d(p, q, r);
  int o2 = orient2d(p, q, s);
  int o3 = orient2d(r, s, p);
  int o4 = orient2d(r, s, q);
  if (shared == 1) {
    // Sharing one endpoint conflicts only on collinear overlap past it.
    if (o1 == 0 && o2 == 0) return collinear_overlap(p, q, r, s);
    return false;
  }
  if (o1 == 0 && o2 == 0) return collinear_overlap(p, q, r, s);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true; // proper crossing
  // T-contacts: an endpoint in the interior of the other closed segment.
  if (o1 == 0 && on_closed_segment(p, q, r)) return true;
  if (o2 == 0 && on_closed_segment(p, q, s)) return true;
  if (o3 == 0 && on_closed_segment(r, s, p)) return true;
  if (o4 == 0 && on_closed_segment(r, s, q)) return true;
  return false;
}

} // namespace tspsurf
