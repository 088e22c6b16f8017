#include "hst/points.hpp"

#include <fstream>
#include <sstream>

#include "hst/error.hpp"
#include "hst/rng.hpp"

namespace hst {
namespace {

Rational dyadic(SplitMix64& rng, unsigned precision) {
  // numerator with exactly `precision` random bits
  BigInt num = 0;
  unsigned got = 0;
  while (got < precision) {
    const unsigned take = std::min(64u, precision - got);
    std::uint64_t bits = rng.next();
    if (take < 64) bits >>= (64 - take);
    num <<= take;
    num += bits;
    got += take;
  }
  return Rational(num, BigInt(1) << precision);
}

PointSet generate_once(std::size_t n, int d, RandomModel model,
                       std::uint64_t seed, unsigned precision,
                       std::uint64_t nonce) {
  SplitMix64 rng(mix_seed(seed, nonce));
  PointSet ps;
  ps.d = d;
  ps.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Point p;
    if (model == RandomModel::UnitCube) {
      for (int c = 0; c < d; ++c) p.coords.push_back(dyadic(rng, precision));
    } else {
      // Stereographic image of v in [-1, 1]^{d-1}: a rational point exactly
      // on the unit sphere, x = (2v, |v|^2 - 1) / (|v|^2 + 1).
      std::vector<Rational> v(d - 1);
      Rational norm2 = 0;
      for (int c = 0; c + 1 < d; ++c) {
        v[c] = 2 * dyadic(rng, precision) - 1;
        norm2 += v[c] * v[c];
      }
      for (int c = 0; c + 1 < d; ++c) p.coords.push_back(2 * v[c] / (norm2 + 1));
      p.coords.push_back((norm2 - 1) / (norm2 + 1));
    }
    ps.points.push_back(std::move(p));
  }
  return ps;
}

}  // namespace

PointSet moment_curve(std::size_t n, int d) {
  if (n < 1 || d < 1) throw InvalidArgument("moment_curve: need n >= 1, d >= 1");
  PointSet ps;
  ps.d = d;
  ps.label = "moment(" + std::to_string(n) + "," + std::to_string(d) + ")";
  ps.points.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    Point p;
    BigInt pw = 1;
    for (int c = 0; c < d; ++c) {
      pw *= BigInt(i);
      p.coords.push_back(Rational(pw));
    }
    ps.points.push_back(std::move(p));
  }
  return ps;
}

PointSet random_pointset(std::size_t n, int d, RandomModel model,
                         std::uint64_t seed, unsigned precision,
                         std::uint64_t budget) {
  if (n < 1 || d < 1) throw InvalidArgument("random_pointset: need n >= 1, d >= 1");
  if (precision < 32) throw InvalidArgument("random_pointset: precision >= 32");
  if (model == RandomModel::Sphere && d < 2)
    throw InvalidArgument("sphere model needs d >= 2");

  constexpr std::uint64_t kMaxNonce = 64;
  const bool checkable =
      n <= std::size_t(d) ||
      binomial(long(n), long(d) + 1) <= BigInt(budget);
  for (std::uint64_t nonce = 0; nonce < kMaxNonce; ++nonce) {
    PointSet ps = generate_once(n, d, model, seed, precision, nonce);
    std::ostringstream label;
    label << (model == RandomModel::UnitCube ? "cube" : "sphere") << "("
          << n << "," << d << ") seed=" << seed << " nonce=" << nonce;
    ps.label = label.str();
    if (!checkable || is_general_position(ps, budget)) return ps;
  }
  throw DegenerateInput("random_pointset: no general-position draw in " +
                        std::to_string(kMaxNonce) + " nonce retries");
}

std::string format_points(const PointSet& ps) {
  std::ostringstream out;
  if (!ps.label.empty()) out << "# label: " << ps.label << "\n";
  out << ps.d << " " << ps.points.size() << "\n";
  for (const Point& p : ps.points) {
    for (int c = 0; c < ps.d; ++c) {
      if (c) out << " ";
      const Rational& r = p.coords[c];
      out << boost::multiprecision::numerator(r).str();
      if (boost::multiprecision::denominator(r) != 1)
        out << "/" << boost::multiprecision::denominator(r).str();
    }
    out << "\n";
  }
  return out.str();
}

namespace {

Rational parse_rational(const std::string& tok, std::size_t line_no, std::size_t col) {
  const auto slash = tok.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(tok));
    const BigInt num(tok.substr(0, slash));
    const BigInt den(tok.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + tok + "' at line " +
                     std::to_string(line_no) + ", column " + std::to_string(col));
  }
}

}  // namespace

PointSet parse_points(const std::string& text) {
  std::istringstream in(text);
  PointSet ps;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t expect_n = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string tag = "# label:";
      if (line.rfind(tag, 0) == 0) {
        std::string lbl = line.substr(tag.size());
        if (!lbl.empty() && lbl[0] == ' ') lbl.erase(0, 1);
        ps.label = lbl;
      }
      continue;
    }
    std::istringstream row(line);
    if (!have_header) {
      long d = 0, n = 0;
      if (!(row >> d >> n) || d < 1 || n < 1)
        throw ParseError("bad header at line " + std::to_string(line_no));
      ps.d = int(d);
      expect_n = std::size_t(n);
      have_header = true;
      continue;
    }
    Point p;
    std::string tok;
    std::size_t col = 0;
    while (row >> tok) p.coords.push_back(parse_rational(tok, line_no, ++col));
    if (p.coords.size() != std::size_t(ps.d))
      throw ParseError("row at line " + std::to_string(line_no) + " has " +
                       std::to_string(p.coords.size()) + " coordinates, expected " +
                       std::to_string(ps.d));
    ps.points.push_back(std::move(p));
  }
  if (!have_header) throw ParseError("missing header");
  if (ps.points.size() != expect_n)
    throw ParseError("header promised " + std::to_string(expect_n) +
                     " points, file has " + std::to_string(ps.points.size()));
  return ps;
}

void save_points(const PointSet& ps, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << format_points(ps);
}

PointSet load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_points(buf.str());
}

}  // namespace hst
