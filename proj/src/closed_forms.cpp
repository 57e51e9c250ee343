#include "vinc/closed_forms.hpp"

#include <stdexcept>

#include "vinc/avoiders.hpp"
#include "vinc/statistics.hpp"

namespace vinc {
namespace {

Int central(long n, long shift_top, long shift_bot) {
  return binomial(2 * n + shift_top, n + shift_bot);
}

std::function<Int(long)> cf_n_catalan() {
  return [](long n) { return binomial(2 * n, n - 1); };
}

std::function<Int(long)> cf_catalan() {
  return [](long n) -> Int {
    if (n < 1) return Int(0);
    return catalan(n);
  };
}

// binomial(2n + shift_top, n + shift_bot)
std::function<Int(long)> cf_central(long shift_top, long shift_bot) {
  return [=](long n) { return central(n, shift_top, shift_bot); };
}

std::function<Int(long)> cf_power_gap() {
  return [](long n) -> Int {
    if (n < 1) return Int(0);
    return pow4(static_cast<unsigned long>(n - 1)) - binomial(2 * n - 1, n);
  };
}

std::function<Int(long)> cf_half_gap() {
  return [](long n) -> Int {
    if (n < 1) return Int(0);
    return exact_div(Int(n) * binomial(2 * n - 1, n) - pow4(static_cast<unsigned long>(n - 1)),
                     Int(2));
  };
}

std::function<Int(long)> cf_half_central() {
  return [](long n) -> Int {
    if (n < 1) return Int(0);
    return exact_div(Int(n - 1) * binomial(2 * n - 2, n - 1), Int(2));
  };
}

EnumResult row(std::string host, std::string item, Anchor a, std::string gf,
               std::function<Int(long)> cf = nullptr, std::string cf_text = "") {
  EnumResult r;
  r.host_class = std::move(host);
  r.item = std::move(item);
  r.anchor = a;
  r.gf = std::move(gf);
  r.closed_form = std::move(cf);
  r.closed_form_text = std::move(cf_text);
  return r;
}

std::vector<EnumResult> build_table() {
  const Anchor N = Anchor::none;
  const Anchor F = Anchor::first;
  const Anchor L = Anchor::last;
  std::vector<EnumResult> t;

  // Class avoiding 231.
  t.push_back(row("231", "1", N, "z*B*C^2", cf_n_catalan(), "binom(2n, n-1)"));
  t.push_back(row("231", "1", F, "z*C^2", cf_catalan(), "C_n"));
  t.push_back(row("231", "1", L, "z*C^2", cf_catalan(), "C_n"));

  t.push_back(row("231", "2-1", N, "z^2*B^2*C^3"));
  t.push_back(row("231", "2-1", F, "z^2*B*C^3", cf_central(-1, -2), "binom(2n-1, n-2)"));
  t.push_back(row("231", "2-1", L, "z^2*C^4"));
  t.push_back(row("231", "21", N, "z^2*B*C^3", cf_central(-1, -2), "binom(2n-1, n-2)"));
  t.push_back(row("231", "21", F, "z^2*C^3"));
  t.push_back(row("231", "21", L, "z^2*C^2"));
  t.push_back(row("231", "1-2", N, "z^2*B^3*C^2"));
  t.push_back(row("231", "1-2", F, "z^2*B*C^3", cf_central(-1, -2), "binom(2n-1, n-2)"));
  t.push_back(row("231", "1-2", L, "z^2*B*C^4"));
  t.push_back(row("231", "12", N, "z^2*B*C^3", cf_central(-1, -2), "binom(2n-1, n-2)"));
  t.push_back(row("231", "12", F, "z^2*C^2"));
  t.push_back(row("231", "12", L, "z^2*C^3"));

  t.push_back(row("231", "3-2-1", N, "z^3*B^3*C^4"));
  t.push_back(row("231", "3-2-1", F, "z^3*B^2*C^4"));
  t.push_back(row("231", "3-1-2", N, "z^3*B^4*C^3"));
  t.push_back(row("231", "3-1-2", F, "z^3*B^3*C^3"));
  t.push_back(row("231", "1-3-2", N, "z^3*B^4*C^3"));
  t.push_back(row("231", "1-3-2", F, "z^3*B^2*C^4"));
  t.push_back(row("231", "2-1-3", N, "z^3*B^4*C^3"));
  t.push_back(row("231", "2-1-3", L, "z^3*B^2*C^5"));
  t.push_back(row("231", "1-2-3", N, "z^3*B^5*C^3"));
  t.push_back(row("231", "1-2-3", F, "z^3*B^3*C^3"));

  t.push_back(row("231", "3-21", N, "z^3*B^2*C^4"));
  t.push_back(row("231", "3-21", F, "z^3*B*C^4"));
  t.push_back(row("231", "3-12", N, "z^3*B^2*C^4"));
  t.push_back(row("231", "3-12", F, "z^3*B*C^4"));
  t.push_back(row("231", "32-1", N, "z^3*B^2*C^4"));
  t.push_back(row("231", "32-1", F, "z^3*B*C^4"));
  t.push_back(row("231", "31-2", N, "z^3*B^2*C^4"));
  t.push_back(row("231", "31-2", F, "z^3*B*C^4"));
  t.push_back(row("231", "13-2", N, "z^3*B^2*C^4"));
  t.push_back(row("231", "13-2", F, "z^3*B*C^3"));
  t.push_back(row("231", "1-32", N, "z^3*B^3*C^3"));
  t.push_back(row("231", "1-32", F, "z^3*B*C^4"));
  t.push_back(row("231", "21-3", N, "z^3*B^3*C^3"));
  t.push_back(row("231", "21-3", L, "z^3*B*C^5"));
  t.push_back(row("231", "12-3", N, "z^3*B^3*C^3"));
  t.push_back(row("231", "12-3", F, "z^3*B*C^3"));
  t.push_back(row("231", "12-3", L, "z^3*B*C^5"));
  t.push_back(row("231", "2-13", N, "z^3*B*C^5", cf_central(-1, -3), "binom(2n-1, n-3)"));
  t.push_back(row("231", "2-13", L, "z^3*C^5"));
  t.push_back(row("231", "1-23", N, "z^3*B^3*C^3 + z^4*B^2*C^6"));
  t.push_back(row("231", "1-23", F, "z^3*B*C^4"));

  t.push_back(row("231", "213", N, "z^3*B*C^3", cf_central(-3, -3), "binom(2n-3, n-3)"));
  t.push_back(row("231", "213", L, "z^3*C^3"));
  t.push_back(row("231", "312", N, "z^3*B*C^3", cf_central(-3, -3), "binom(2n-3, n-3)"));
  t.push_back(row("231", "312", F, "z^3*C^3"));
  t.push_back(row("231", "321", N, "z^3*B*C^4", cf_central(-2, -3), "binom(2n-2, n-3)"));
  t.push_back(row("231", "321", F, "z^3*C^4"));
  t.push_back(row("231", "132", N, "z^3*B*C^4", cf_central(-2, -3), "binom(2n-2, n-3)"));
  t.push_back(row("231", "132", F, "z^3*C^3"));
  t.push_back(row("231", "123", N, "z^3*B*C^4", cf_central(-2, -3), "binom(2n-2, n-3)"));
  t.push_back(row("231", "123", F, "z^3*C^2"));
  t.push_back(row("231", "123", L, "z^3*C^4"));

  t.push_back(row("231", "maj", N, "z^2*B^3*C", cf_half_gap(),
                  "(n*binom(2n-1, n) - 4^(n-1)) / 2"));

  // Class avoiding 321.
  t.push_back(row("321", "1", N, "z*B*C^2", cf_n_catalan(), "binom(2n, n-1)"));
  t.push_back(row("321", "2-1", N, "z^2*B^2*C^2", cf_power_gap(), "4^(n-1) - binom(2n-1, n)"));
  t.push_back(row("321", "21", N, "z^2*B*C^2", cf_central(-2, -2), "binom(2n-2, n-2)"));
  t.push_back(row("321", "31-2", N, "z^3*B^2*C^3"));
  t.push_back(row("321", "23-1", N, "z^3*B^2*C^3"));
  t.push_back(row("321", "maj", N, "z^2*B^3", cf_half_central(),
                  "(n-1)*binom(2n-2, n-1) / 2"));
  t.push_back(row("321", "den", N, "z^2*B^3*C", cf_half_gap(),
                  "(n*binom(2n-1, n) - 4^(n-1)) / 2"));
  t.push_back(row("321", "2-13:low", N, "z^4*B*C^6", cf_central(-2, -4), "binom(2n-2, n-4)"));

  return t;
}

}  // namespace

std::string EnumResult::key() const {
  return host_class + " " + item + " " + vinc::to_string(anchor);
}

const std::vector<EnumResult>& enumeration_results() {
  static const std::vector<EnumResult> table = build_table();
  return table;
}

const EnumResult* find_result(const std::string& host_class, const std::string& item,
                              Anchor anchor) {
  for (const EnumResult& r : enumeration_results())
    if (r.host_class == host_class && r.item == item && r.anchor == anchor) return &r;
  return nullptr;
}

VincularPattern host_class_pattern(const std::string& host_class) {
  if (host_class == "321" || host_class == "3-2-1") return VincularPattern::parse("3-2-1");
  if (host_class == "231" || host_class == "2-3-1") return VincularPattern::parse("2-3-1");
  throw std::invalid_argument("unknown avoidance class: " + host_class);
}

Int brute_total(const EnumResult& r, int n) {
  const VincularPattern avoided = host_class_pattern(r.host_class);
  Int sum = 0;
  if (r.item == "maj" || r.item == "den" || r.item == "inv" || r.item == "des") {
    const StatKind stat = parse_stat(r.item);
    for_each_avoider(n, avoided,
                     [&](const Permutation& p) { sum += Int(statistic(stat, p)); });
  } else if (r.item == "2-13:low") {
    for_each_avoider(n, avoided, [&](const Permutation& p) {
      sum += Int(static_cast<long>(occurrences_2_13_low(p)));
    });
  } else {
    const VincularPattern pat = VincularPattern::parse(r.item, r.anchor);
    for_each_avoider(n, avoided, [&](const Permutation& p) {
      sum += Int(static_cast<long>(occurrences(pat, p)));
    });
  }
  return sum;
}

}  // namespace vinc
