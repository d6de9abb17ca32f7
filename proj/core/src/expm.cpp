#include "gme/expm.hpp"

#include <cmath>

namespace gme {

namespace {

// Diagonal Padé approximant of order m: after the call, (V + U)(V − U)^{-1}
// approximates e^A around A = 0. Coefficients from Higham, "The scaling and
// squaring method for the matrix exponential revisited", SIAM J. Matrix Anal.
void pade3(const Mat& a, const Mat& a2, Mat& u, Mat& v) {
  static const double b[] = {120.0, 60.0, 12.0, 1.0};
  const Mat i = Mat::Identity(a.rows(), a.cols());
  u = a * (b[3] * a2 + b[1] * i);
  v = b[2] * a2 + b[0] * i;
}

void pade5(const Mat& a, const Mat& a2, Mat& u, Mat& v) {
  static const double b[] = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
  const Mat i = Mat::Identity(a.rows(), a.cols());
  const Mat a4 = a2 * a2;
  u = a * (b[5] * a4 + b[3] * a2 + b[1] * i);
  v = b[4] * a4 + b[2] * a2 + b[0] * i;
}

void pade7(const Mat& a, const Mat& a2, Mat& u, Mat& v) {
  static const double b[] = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                             25200.0,    1512.0,    56.0,      1.0};
  const Mat i = Mat::Identity(a.rows(), a.cols());
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;
  u = a * (b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * i);
  v = b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * i;
}

void pade9(const Mat& a, const Mat& a2, Mat& u, Mat& v) {
  static const double b[] = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0,
                             30270240.0,    2162160.0,    110880.0,     3960.0,
                             90.0,          1.0};
  const Mat i = Mat::Identity(a.rows(), a.cols());
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;
  const Mat a8 = a6 * a2;
  u = a * (b[9] * a8 + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * i);
  v = b[8] * a8 + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * i;
}

void pade13(const Mat& a, const Mat& a2, Mat& u, Mat& v) {
  static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                             1187353796428800.0,  129060195264000.0,   10559470521600.0,
                             670442572800.0,      33522128640.0,       1323241920.0,
                             40840800.0,          960960.0,            16380.0,
                             182.0,               1.0};
  const Mat i = Mat::Identity(a.rows(), a.cols());
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;
  u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
           b[3] * a2 + b[1] * i);
  v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 +
      b[0] * i;
}

}  // namespace

Mat expm(const Mat& a) {
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm
  Mat u, v;
  int squarings = 0;

  if (norm < 1.495585217958292e-2) {
    const Mat a2 = a * a;
    pade3(a, a2, u, v);
  } else if (norm < 2.539398330063230e-1) {
    const Mat a2 = a * a;
    pade5(a, a2, u, v);
  } else if (norm < 9.504178996162932e-1) {
    const Mat a2 = a * a;
    pade7(a, a2, u, v);
  } else if (norm < 2.097847961257068) {
    const Mat a2 = a * a;
    pade9(a, a2, u, v);
  } else {
    const double theta13 = 5.371920351148152;
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / theta13))));
    const Mat scaled = a / std::exp2(squarings);
    const Mat a2 = scaled * scaled;
    pade13(scaled, a2, u, v);
  }

  Mat result = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) {
    result = (result * result).eval();
  }
  return result;
}

}  // namespace gme
