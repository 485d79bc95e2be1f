#include "typeb/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "typeb/cumulants.hpp"
#include "typeb/errors.hpp"
#include "typeb/json_io.hpp"
#include "typeb/limit_theorems.hpp"
#include "typeb/nc_lattice.hpp"
#include "typeb/series.hpp"
#include "typeb/verification.hpp"

namespace typeb {

namespace {

struct Output {
  Json json;
  std::string plain;
};

// "p/q,r/s" -> DualScalar
DualScalar parse_dual(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw ParseError("expected 'x,t' with rational components: '" + text + "'");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

// "x,t;x,t;..." -> coefficients 1..N
std::vector<DualScalar> parse_dual_list(const std::string& text) {
  std::vector<DualScalar> out;
  size_t start = 0;
  while (start <= text.size()) {
    const auto semi = text.find(';', start);
    const std::string item =
        text.substr(start, semi == std::string::npos ? text.size() - start : semi - start);
    out.push_back(parse_dual(item));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

std::vector<long long> parse_summands(const std::string& text) {
  std::vector<long long> out;
  size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? text.size() - start : comma - start);
    try {
      size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("not an integer count: '" + item + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

CSeries series_from_flag(const std::string& text) {
  auto coeffs = parse_dual_list(text);
  const int order = static_cast<int>(coeffs.size());
  return CSeries(order, std::move(coeffs));
}

std::string plain_pairs(const std::vector<DualScalar>& values) {
  std::string out;
  for (const auto& v : values) {
    out += to_string(v);
    out += '\n';
  }
  return out;
}

Output make_series_output(const char* key, const CSeries& result) {
  Json j{{"schema", 1}, {key, to_json(result)}};
  std::string plain;
  for (int k = 1; k <= result.order(); ++k) plain += to_string(result.coeff(k)) + "\n";
  return {std::move(j), std::move(plain)};
}

Json criteria_json(const std::vector<CriterionResult>& results) {
  Json criteria = Json::array();
  for (const auto& r : results) {
    Json details = Json::array();
    for (const auto& d : r.details) details.push_back(d);
    criteria.push_back(
        Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"details", std::move(details)}});
  }
  return Json{{"schema", 1}, {"all_passed", all_passed(results)}, {"criteria", std::move(criteria)}};
}

std::string criteria_plain(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  int failures = 0;
  for (const auto& r : results) {
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << "\n";
    for (const auto& d : r.details) os << "    " << d << "\n";
    if (!r.passed) ++failures;
  }
  if (failures == 0)
    os << "all " << results.size() << " criteria hold\n";
  else
    os << failures << " of " << results.size() << " criteria fail\n";
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact combinatorics of free probability over the dual-pair coefficient algebra"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "plain"}));
  app.add_option("--out", out_path, "write output to a file instead of standard output");

  // one deferred action per subcommand; runs after parsing succeeds
  std::function<Output()> action;
  int exit_code = 0;

  {
    auto* cmd = app.add_subcommand("nc-enumerate", "list the non-crossing partitions of {1..n}");
    cmd->fallthrough();
    auto n = std::make_shared<int>(0);
    cmd->add_option("--n", *n, "ground-set size")->required();
    cmd->callback([&action, n]() {
      action = [n]() {
        const auto parts = enumerate_nc(*n);
        Json list = Json::array();
        std::string plain = "count: " + std::to_string(parts.size()) + "\n";
        for (const auto& p : parts) {
          list.push_back(p.to_string());
          plain += p.to_string() + "\n";
        }
        return Output{Json{{"schema", 1},
                           {"n", *n},
                           {"count", parts.size()},
                           {"partitions", std::move(list)}},
                      std::move(plain)};
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("ncb-enumerate",
                                   "list the symmetric non-crossing partitions of {+-1..+-n}");
    cmd->fallthrough();
    auto n = std::make_shared<int>(0);
    cmd->add_option("--n", *n, "ground-set size")->required();
    cmd->callback([&action, n]() {
      action = [n]() {
        const auto parts = enumerate_ncb(*n);
        Json list = Json::array();
        std::string plain = "count: " + std::to_string(parts.size()) + "\n";
        for (const auto& p : parts) {
          list.push_back(p.to_string());
          plain += p.to_string() + "\n";
        }
        return Output{Json{{"schema", 1},
                           {"n", *n},
                           {"count", parts.size()},
                           {"partitions", std::move(list)}},
                      std::move(plain)};
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("kreweras", "complement of a non-crossing partition");
    cmd->fallthrough();
    auto p = std::make_shared<std::string>();
    cmd->add_option("--p", *p, "partition, e.g. 1,2|3")->required();
    cmd->callback([&action, p]() {
      action = [p]() {
        const SetPartition parsed = SetPartition::parse(*p);
        const SetPartition complement = kreweras(parsed);
        return Output{Json{{"schema", 1}, {"p", parsed.to_string()}, {"kreweras", complement.to_string()}},
                      complement.to_string() + "\n"};
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("moebius", "Moebius function of an interval [lower, upper]");
    cmd->fallthrough();
    auto lo = std::make_shared<std::string>();
    auto hi = std::make_shared<std::string>();
    cmd->add_option("--lower", *lo, "finer partition")->required();
    cmd->add_option("--upper", *hi, "coarser partition")->required();
    cmd->callback([&action, lo, hi]() {
      action = [lo, hi]() {
        const SetPartition lower = SetPartition::parse(*lo);
        const SetPartition upper = SetPartition::parse(*hi);
        const long long mu = moebius(PartitionInterval(lower, upper));
        return Output{Json{{"schema", 1},
                           {"lower", lower.to_string()},
                           {"upper", upper.to_string()},
                           {"mu", mu}},
                      std::to_string(mu) + "\n"};
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("m2c", "moments to cumulants");
    cmd->fallthrough();
    auto values = std::make_shared<std::string>();
    cmd->add_option("--moments", *values, "M_1..M_N as x,t;x,t;...")->required();
    cmd->callback([&action, values]() {
      action = [values]() {
        auto v = parse_dual_list(*values);
        const int order = static_cast<int>(v.size());
        const MomentSequence m(order, std::move(v));
        const CumulantSequence k = moments_to_cumulants(m);
        return Output{Json{{"schema", 1}, {"moments", to_json(m)}, {"cumulants", to_json(k)}},
                      plain_pairs(k.values())};
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("c2m", "cumulants to moments");
    cmd->fallthrough();
    auto values = std::make_shared<std::string>();
    cmd->add_option("--cumulants", *values, "kappa_1..kappa_N as x,t;x,t;...")->required();
    cmd->callback([&action, values]() {
      action = [values]() {
        auto v = parse_dual_list(*values);
        const int order = static_cast<int>(v.size());
        const CumulantSequence k(order, std::move(v));
        const MomentSequence m = cumulants_to_moments(k);
        return Output{Json{{"schema", 1}, {"cumulants", to_json(k)}, {"moments", to_json(m)}},
                      plain_pairs(m.values())};
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("boxconv", "boxed convolution of two series");
    cmd->fallthrough();
    auto f = std::make_shared<std::string>();
    auto g = std::make_shared<std::string>();
    cmd->add_option("--f", *f, "coefficients 1..N as x,t;x,t;...")->required();
    cmd->add_option("--g", *g, "coefficients 1..N")->required();
    cmd->callback([&action, f, g]() {
      action = [f, g]() {
        return make_series_output("result", box_conv(series_from_flag(*f), series_from_flag(*g)));
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("checkboxconv",
                                   "restricted boxed convolution ({1} forced to a singleton)");
    cmd->fallthrough();
    auto f = std::make_shared<std::string>();
    auto g = std::make_shared<std::string>();
    cmd->add_option("--f", *f, "coefficients 1..N as x,t;x,t;...")->required();
    cmd->add_option("--g", *g, "coefficients 1..N")->required();
    cmd->callback([&action, f, g]() {
      action = [f, g]() {
        return make_series_output("result",
                                  check_box_conv(series_from_flag(*f), series_from_flag(*g)));
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("invert", "compositional inverse of a series");
    cmd->fallthrough();
    auto f = std::make_shared<std::string>();
    cmd->add_option("--f", *f, "coefficients 1..N as x,t;x,t;...")->required();
    cmd->callback([&action, f]() {
      action = [f]() {
        return make_series_output("result", invert_compositional(series_from_flag(*f)));
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("s-transform", "S-transform of an R-series");
    cmd->fallthrough();
    auto f = std::make_shared<std::string>();
    cmd->add_option("--f", *f, "R-transform coefficients 1..N as x,t;x,t;...")->required();
    cmd->callback([&action, f]() {
      action = [f]() {
        const UnitSeries s = s_transform(series_from_flag(*f));
        Json j{{"schema", 1}, {"result", to_json(s)}};
        std::string plain;
        for (int k = 0; k <= s.order(); ++k) plain += to_string(s.coeff(k)) + "\n";
        return Output{std::move(j), std::move(plain)};
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("clt", "central-limit R-transform and moments");
    cmd->fallthrough();
    auto order = std::make_shared<int>(6);
    auto variance = std::make_shared<std::string>("1,1");
    cmd->add_option("--order", *order, "truncation order (default 6)");
    cmd->add_option("--variance", *variance, "second cumulant as x,t (default 1,1)");
    cmd->callback([&action, order, variance]() {
      action = [order, variance]() {
        const CltSpec spec{*order, parse_dual(*variance)};
        const CSeries r = clt_limit_r_transform(spec);
        const MomentSequence m = clt_limit_moments(spec);
        Json j{{"schema", 1},
               {"order", spec.order},
               {"variance", to_json(spec.variance)},
               {"r_transform", to_json(r)},
               {"moments", to_json(m)}};
        return Output{std::move(j), plain_pairs(m.values())};
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("arcsine", "componentwise binomial identity for limit moments");
    cmd->fallthrough();
    auto order = std::make_shared<int>(20);
    cmd->add_option("--order", *order, "check all even orders up to this bound (default 20)");
    cmd->callback([&action, order]() {
      action = [order]() {
        const bool holds = arcsine_check(*order);
        return Output{Json{{"schema", 1}, {"order", *order}, {"holds", holds}},
                      std::string("holds: ") + (holds ? "true" : "false") + "\n"};
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("poisson", "compound limit of Bernoulli-type sums");
    cmd->fallthrough();
    auto rate = std::make_shared<std::string>("1,0");
    auto jump = std::make_shared<std::string>("1,1");
    auto order = std::make_shared<int>(4);
    auto summands = std::make_shared<std::string>("2,4,8,16,32");
    cmd->add_option("--rate", *rate, "rate as x,t (default 1,0)");
    cmd->add_option("--jump", *jump, "jump as x,t (default 1,1)");
    cmd->add_option("--order", *order, "cumulant order (default 4)");
    cmd->add_option("--summands", *summands, "comma-separated N values (default 2,4,8,16,32)");
    cmd->callback([&action, rate, jump, order, summands]() {
      action = [rate, jump, order, summands]() {
        const BernoulliSpec spec{parse_dual(*rate), parse_dual(*jump)};
        const auto ns = parse_summands(*summands);
        const auto report = poisson_report(spec, ns, *order);
        const CumulantSequence limit = poisson_limit_cumulants(spec, *order);
        Json entries = Json::array();
        std::string plain = "limit:\n" + plain_pairs(limit.values());
        for (const auto& entry : report) {
          entries.push_back(to_json(entry));
          plain += "N=" + std::to_string(entry.n_summands) + " deviation:\n";
          plain += plain_pairs(entry.deviation);
        }
        Json j{{"schema", 1},
               {"rate", to_json(spec.rate)},
               {"jump", to_json(spec.jump)},
               {"order", *order},
               {"limit", to_json(limit)},
               {"reports", std::move(entries)}};
        return Output{std::move(j), std::move(plain)};
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("bernoulli", "moments of one Bernoulli-type summand");
    cmd->fallthrough();
    auto rate = std::make_shared<std::string>("1,0");
    auto jump = std::make_shared<std::string>("1,1");
    auto order = std::make_shared<int>(4);
    cmd->add_option("--rate", *rate, "rate as x,t (default 1,0)");
    cmd->add_option("--jump", *jump, "jump as x,t (default 1,1)");
    cmd->add_option("--order", *order, "moment order (default 4)");
    cmd->callback([&action, rate, jump, order]() {
      action = [rate, jump, order]() {
        const BernoulliSpec spec{parse_dual(*rate), parse_dual(*jump)};
        const MomentSequence m = bernoulli_moments(spec, *order);
        Json j{{"schema", 1},
               {"rate", to_json(spec.rate)},
               {"jump", to_json(spec.jump)},
               {"order", *order},
               {"moments", to_json(m)}};
        return Output{std::move(j), plain_pairs(m.values())};
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("semicircle-square",
                                   "cumulants of the squared central-limit variable");
    cmd->fallthrough();
    auto sigma = std::make_shared<std::string>("1,1");
    auto order = std::make_shared<int>(5);
    cmd->add_option("--sigma", *sigma, "second cumulant as x,t (default 1,1)");
    cmd->add_option("--order", *order, "cumulant order (default 5)");
    cmd->callback([&action, sigma, order]() {
      action = [sigma, order]() {
        const DualScalar s = parse_dual(*sigma);
        const CumulantSequence k = clt_square_cumulants(s, *order);
        const bool holds = semicircle_square_check(s, *order);
        Json j{{"schema", 1},
               {"sigma", to_json(s)},
               {"order", *order},
               {"holds", holds},
               {"cumulants", to_json(k)}};
        std::string plain = std::string("holds: ") + (holds ? "true" : "false") + "\n" +
                            plain_pairs(k.values());
        return Output{std::move(j), std::move(plain)};
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("hankel", "Hankel minor test on second-component moments");
    cmd->fallthrough();
    auto lambda = std::make_shared<std::string>("1/100");
    auto alpha = std::make_shared<std::string>("1");
    cmd->add_option("--lambda", *lambda, "rate (rational, default 1/100)");
    cmd->add_option("--alpha", *alpha, "jump (rational, default 1)");
    cmd->callback([&action, lambda, alpha]() {
      action = [lambda, alpha]() {
        const Rational l = parse_rational(*lambda);
        const Rational a = parse_rational(*alpha);
        const BernoulliSpec spec{DualScalar(l, 0), DualScalar(a, a)};
        const MomentSequence m = cumulants_to_moments(poisson_limit_cumulants(spec, 4));
        const bool holds = hankel_necessary_check(m);
        const Rational lhs = m.value(2).t * m.value(4).t;
        const Rational rhs = m.value(3).t * m.value(3).t;
        const std::string message =
            holds ? "HOLDS: m2*m4 >= m3^2" : "FAILS: m2*m4 < m3^2";
        Json j{{"schema", 1},
               {"lambda", rational_to_string(l)},
               {"alpha", rational_to_string(a)},
               {"m2", rational_to_string(m.value(2).t)},
               {"m3", rational_to_string(m.value(3).t)},
               {"m4", rational_to_string(m.value(4).t)},
               {"m2m4", rational_to_string(lhs)},
               {"m3sq", rational_to_string(rhs)},
               {"holds", holds},
               {"message", message}};
        std::string plain;
        plain += "m2 = " + rational_to_string(m.value(2).t) + "\n";
        plain += "m3 = " + rational_to_string(m.value(3).t) + "\n";
        plain += "m4 = " + rational_to_string(m.value(4).t) + "\n";
        plain += "m2*m4 = " + rational_to_string(lhs) + "\n";
        plain += "m3^2 = " + rational_to_string(rhs) + "\n";
        plain += message + "\n";
        return Output{std::move(j), std::move(plain)};
      };
    });
  }

  {
    auto* cmd = app.add_subcommand("verify-paper", "run the full identity suite");
    cmd->fallthrough();
    cmd->callback([&action, &exit_code]() {
      action = [&exit_code]() {
        const auto results = run_acceptance_suite();
        if (!all_passed(results)) exit_code = 1;
        return Output{criteria_json(results), criteria_plain(results)};
      };
    });
  }

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("typeb");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Output result = action();
    const std::string text = format == "json" ? result.json.dump(2) + "\n" : result.plain;
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open '" << out_path << "' for writing\n";
        return 1;
      }
      file << text;
    }
    return exit_code;
  } catch (const TypebError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace typeb
