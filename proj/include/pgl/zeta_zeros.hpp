#pragma once

// Nontrivial zeta-zero ordinates: loading, validation, serialization and a
// bundled table of the first 100.
//
// Every zero is taken to lie on the critical line, rho = 1/2 + i*gamma, and
// only gamma > 0 is stored. Consumers pair each zero with its conjugate by
// taking 2 Re of the per-zero term.

#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "pgl/error.hpp"

namespace pgl {

inline constexpr double kFirstZeroOrdinate = 14.134725;

class ZeroTable {
 public:
  /// Validates: strictly increasing, all > 14, first within 1e-4 of
  /// 14.134725. Violations raise FormatError naming the 1-based entry.
  ZeroTable(std::vector<double> ordinates, std::string source)
      : ordinates_(std::move(ordinates)), source_(std::move(source)) {
    if (ordinates_.empty()) throw Error(ErrorKind::empty_table, "zero table is empty");
    for (std::size_t i = 0; i < ordinates_.size(); ++i) {
      const double g = ordinates_[i];
      if (!std::isfinite(g) || g <= 0.0)
        throw FormatError(i + 1, "ordinate must be positive and finite");
      if (i > 0 && !(g > ordinates_[i - 1]))
        throw FormatError(i + 1, "ordinates must be strictly increasing");
      if (!(g > 14.0)) throw FormatError(i + 1, "ordinate must exceed 14");
    }
    if (std::abs(ordinates_.front() - kFirstZeroOrdinate) > 1e-4)
      throw FormatError(1, "first ordinate must be within 1e-4 of 14.134725");
  }

  std::span<const double> ordinates() const noexcept { return ordinates_; }
  std::size_t size() const noexcept { return ordinates_.size(); }
  double operator[](std::size_t i) const { return ordinates_.at(i); }
  const std::string& source() const noexcept { return source_; }

  /// Number of ordinates <= t.
  std::size_t count_up_to(double t) const {
    std::size_t n = 0;
    while (n < ordinates_.size() && ordinates_[n] <= t) ++n;
    return n;
  }

  /// The first n ordinates (or all of them when n exceeds the size).
  ZeroTable prefix(std::size_t n) const {
    if (n == 0) throw Error(ErrorKind::empty_table, "zero table prefix of length 0");
    n = std::min(n, ordinates_.size());
    return ZeroTable(std::vector<double>(ordinates_.begin(), ordinates_.begin() + n),
                     source_);
  }

  friend bool operator==(const ZeroTable& a, const ZeroTable& b) {
    return a.ordinates_ == b.ordinates_;
  }

 private:
  std::vector<double> ordinates_;
  std::string source_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace detail

/// Reads one decimal ordinate per line. Lines starting with '#' and blank
/// lines are skipped; at most max_count ordinates are taken. Ordering is
/// checked line by line; the remaining table invariants once all are read.
inline ZeroTable parse_zeros(std::istream& in, std::size_t max_count,
                             std::string source = "stream") {
  if (max_count == 0)
    throw Error(ErrorKind::empty_table, "max_count = 0 requests an empty zero table");
  std::vector<double> ords;
  std::string line;
  std::size_t line_no = 0;
  while (ords.size() < max_count && std::getline(in, line)) {
    ++line_no;
    const std::string_view text = detail::trim(line);
    if (text.empty() || text.front() == '#') continue;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
      throw FormatError(line_no, "not a decimal number: '" + std::string(text) + "'");
    if (!std::isfinite(value) || value <= 0.0)
      throw FormatError(line_no, "ordinate must be positive");
    if (!ords.empty() && !(value > ords.back()))
      throw FormatError(line_no, "ordinates must be strictly ascending");
    ords.push_back(value);
  }
  if (ords.empty()) throw Error(ErrorKind::empty_table, "no ordinates in " + source);
  return ZeroTable(std::move(ords), std::move(source));
}

inline ZeroTable load_zeros(const std::string& path, std::size_t max_count) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::precondition, "cannot open zeros file " + path);
  return parse_zeros(in, max_count, path);
}

/// Writes the shortest decimal form that reads back to the same double.
inline void serialize_zeros(std::ostream& out, const ZeroTable& table) {
  out << "# zeta zero ordinates, source: " << table.source() << '\n';
  std::array<char, 64> buf{};
  for (double g : table.ordinates()) {
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), g);
    out.write(buf.data(), res.ptr - buf.data());
    out << '\n';
  }
}

namespace detail {

inline constexpr std::array<double, 100> kBundledOrdinates = {
    14.13472514173469379, 21.022039638771554993, 25.010857580145688763,
    30.42487612585951321, 32.935061587739189691, 37.586178158825671257,
    40.918719012147495187, 43.327073280914999519, 48.005150881167159728,
    49.773832477672302182, 52.970321477714460644, 56.446247697063394804,
    59.34704400260235308, 60.831778524609809844, 65.112544048081606661,
    67.079810529494173714, 69.546401711173979253, 72.067157674481907583,
    75.704690699083933168, 77.144840068874805373, 79.337375020249367923,
    82.910380854086030183, 84.735492980517050106, 87.425274613125229407,
    88.809111207634465424, 92.491899270558484296, 94.651344040519886967,
    95.870634228245309759, 98.831194218193692233, 101.31785100573139123,
    103.72553804047833942, 105.44662305232609449, 107.16861118427640752,
    111.02953554316967452, 111.87465917699263709, 114.32022091545271277,
    116.22668032085755438, 118.79078286597621732, 121.37012500242064592,
    122.9468292935525882, 124.25681855434576718, 127.51668387959649512,
    129.57870419995605099, 131.08768853093265672, 133.49773720299758645,
    134.75650975337387133, 138.1160420545334432, 139.73620895212138895,
    141.12370740402112376, 143.11184580762063274, 146.00098248676551855,
    147.42276534255960205, 150.05352042078488035, 150.92525761224146676,
    153.0246938111988962, 156.11290929423786757, 157.59759181759405989,
    158.84998817142049872, 161.18896413759602752, 163.03070968718198724,
    165.53706918790041883, 167.18443997817451344, 169.09451541556882149,
    169.91197647941169897, 173.41153651959155296, 174.75419152336572581,
    176.44143429771041889, 178.37740777609997729, 179.91648402025699614,
    182.20707848436646192, 184.8744678483875088, 185.59878367770747147,
    187.22892258350185199, 189.41615865601693708, 192.02665636071378655,
    193.07972660384570405, 195.26539667952923532, 196.87648184095831695,
    198.01530967625191242, 201.26475194370378873, 202.49359451414053428,
    204.18967180310455433, 205.39469720216328603, 207.90625888780620986,
    209.57650971685625985, 211.69086259536530756, 213.34791935971266619,
    214.54704478349142322, 216.16953850826370027, 219.06759634902137899,
    220.71491883931400337, 221.43070555469333873, 224.00700025460433521,
    224.9833246695822875, 227.42144427967929131, 229.33741330552534811,
    231.25018870049916477, 231.9872352531802486, 233.69340417890830064,
    236.5242296658162058,
};

}  // namespace detail

/// First 100 ordinates, computed to 20 significant digits.
inline const ZeroTable& bundled_zeros() {
  static const ZeroTable table(
      std::vector<double>(detail::kBundledOrdinates.begin(),
                          detail::kBundledOrdinates.end()),
      "bundled");
  return table;
}

}  // namespace pgl
