#include "hallforge/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hallforge/errors.hpp"
#include "hallforge/f1_module.hpp"
#include "hallforge/flag_groupoid.hpp"
#include "hallforge/fq_module.hpp"
#include "hallforge/json_io.hpp"
#include "hallforge/symfunc.hpp"
#include "hallforge/zelevinsky.hpp"

namespace hallforge::cli {

namespace {

using json_io::Json;

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw std::invalid_argument("bad " + what + " '" + text + "'");
  return value;
}

void add_failure(SuiteReport& report, const std::string& label, const std::string& detail) {
  report.failures.push_back(Json{{"case", label}, {"detail", detail}});
}

// Runs one case, turning a VerificationError into a failure witness. Bound
// errors propagate: a suite that cannot be run to completion has no verdict.
template <typename Check>
void run_case(SuiteReport& report, const std::string& label, Check&& check) {
  ++report.cases;
  try {
    std::string detail = check();
    if (!detail.empty()) add_failure(report, label, detail);
  } catch (const VerificationError& e) {
    add_failure(report, label, e.what());
  }
}

std::vector<Partition> all_partitions_upto(int size) {
  std::vector<Partition> out;
  for (int n = 0; n <= size; ++n)
    for (auto& p : partitions_of(n)) out.push_back(std::move(p));
  return out;
}

std::string mismatch(const std::string& a, const std::string& b) { return a + " != " + b; }

void suite_zelevinsky(SuiteReport& report, const SuiteOptions& options) {
  const std::vector<int> qs = options.q_values.empty() ? std::vector<int>{2, 3} : options.q_values;
  for (const auto& lambda : all_partitions_upto(options.size)) {
    std::vector<Partition> columns;
    for (int part : lambda.parts()) columns.push_back(Partition::column(part));
    for (const auto& mu : partitions_of(lambda.size())) {
      const std::string label = "b" + lambda.to_string() + mu.to_string();
      run_case(report, label, [&]() -> std::string {
        const QPoly b = b_polynomial(lambda, mu);
        const QPoly chains = b_polynomial_by_chains(lambda, mu);
        if (chains != b) return "chain recomputation " + mismatch(chains.to_string(), b.to_string());
        if (!b_polynomial_shape_independent(lambda, mu)) return "depends on the composition chosen for the shape";
        for (int q : qs) {
          const BigInt flags = flag_count_direct(q, mu, columns);
          if (b.eval(BigInt(q)) != flags)
            return "q=" + std::to_string(q) + ": " + mismatch(b.eval(BigInt(q)).str(), flags.str());
        }
        return {};
      });
    }
  }
}

void suite_green(SuiteReport& report, const SuiteOptions& options) {
  const std::vector<int> qs = options.q_values.empty() ? std::vector<int>{2} : options.q_values;
  for (int q : qs) {
    const FqBackend backend(q, 1);
    for (int a = 0; a <= options.dim; ++a)
      for (int b = 0; b <= options.dim; ++b) {
        const std::string label = "q=" + std::to_string(q) + " green(" + std::to_string(a) + "," + std::to_string(b) + ")";
        run_case(report, label, [&]() -> std::string {
          const auto result = green_compatibility_check(backend, Partition::column(a), Partition::column(b));
          return result.ok ? std::string() : result.detail;
        });
      }
    for (int n = 0; n <= options.dim; ++n) {
      const std::string label = "q=" + std::to_string(q) + " coproduct(" + std::to_string(n) + ")";
      run_case(report, label, [&]() -> std::string {
        TensorElement expected;
        for (int k = 0; k <= n; ++k)
          expected.add({Partition::column(k), Partition::column(n - k)},
                       Rational(1, ipow(BigInt(q), static_cast<unsigned>(k * (n - k)))));
        const auto actual = coproduct_prime(backend, HallElement::basis(Partition::column(n)));
        return actual == expected ? std::string() : mismatch(actual.to_string(), expected.to_string());
      });
    }
  }
}

void suite_segal(SuiteReport& report, const SuiteOptions& options) {
  const std::vector<int> qs = options.q_values.empty() ? std::vector<int>{2} : options.q_values;
  for (int q : qs) {
    const std::string tag = "q=" + std::to_string(q) + " dim<=" + std::to_string(options.dim);
    run_case(report, tag + " simplicial identities", [&]() -> std::string {
      const auto r = simplicial_identities_check(q, options.dim);
      return r.ok ? std::string() : r.detail;
    });
    run_case(report, tag + " 2-Segal squares", [&]() -> std::string {
      const auto r = two_segal_cardinality_check(q, options.dim);
      return r.ok ? std::string() : r.detail;
    });
  }
}

void suite_symfunc(SuiteReport& report, const SuiteOptions& options) {
  for (const auto& lambda : all_partitions_upto(options.size)) {
    run_case(report, "e" + lambda.to_string(), [&]() -> std::string {
      const auto e = elementary_to_monomial(lambda);
      if (!e.homogeneous_of_degree(lambda.size())) return "not homogeneous";
      if (e.coeff(lambda.conjugate()) != QPoly{1}) return "coefficient of m" + lambda.conjugate().to_string() + " is not 1";
      return {};
    });
    run_case(report, "phi" + lambda.to_string(), [&]() -> std::string {
      const auto image = phi_image(lambda);
      return image == SymFunc::monomial(lambda) ? std::string() : image.to_string();
    });
    run_case(report, "hall-littlewood" + lambda.to_string(), [&]() -> std::string {
      const auto at_one = hall_littlewood_image(lambda).specialized(1);
      return at_one == SymFunc::monomial(lambda) ? std::string() : at_one.to_string();
    });
  }
}

void suite_statistics(SuiteReport& report, const SuiteOptions& options) {
  for (int n = 0; n <= options.size; ++n)
    run_case(report, "inversions " + std::to_string(n), [&]() -> std::string {
      const auto got = inversion_partition_function(n);
      const auto want = q_factorial(n);
      return got == want ? std::string() : mismatch(got.to_string(), want.to_string());
    });
  for (int total = 0; total <= options.path_size; ++total)
    for (int m = 0; m <= total; ++m) {
      const int n = total - m;
      run_case(report, "area " + std::to_string(m) + "," + std::to_string(n), [&]() -> std::string {
        const auto got = lattice_area_partition_function(m, n);
        const auto want = q_binomial(n + m, m);
        return got == want ? std::string() : mismatch(got.to_string(), want.to_string());
      });
    }
}

void suite_f1_bridge(SuiteReport& report, const SuiteOptions& options) {
  for (const auto& lambda : all_partitions_upto(options.size)) {
    for (int k = 0; k <= lambda.size(); ++k)
      for (const auto& mu : partitions_of(k))
        for (const auto& nu : partitions_of(lambda.size() - k)) {
          const std::string label = "g" + lambda.to_string() + mu.to_string() + nu.to_string();
          run_case(report, label, [&]() -> std::string {
            const BigInt f1 = f1t_hall_constant(lambda, mu, nu);
            const BigInt at_one = hall_polynomial(lambda, mu, nu).eval(BigInt(1));
            return f1 == at_one ? std::string() : mismatch(f1.str(), at_one.str());
          });
        }
    // throws VerificationError when subobject and matrix counts disagree
    run_case(report, "elementary" + lambda.to_string(), [&]() -> std::string {
      elementary_product_expansion(lambda);
      return {};
    });
  }
}

std::string env_cache_dir() {
  const char* env = std::getenv("HALLFORGE_CACHE");
  return env ? std::string(env) : std::string();
}

void emit(const Json& j, const std::string& output_path, std::ostream& out) {
  const std::string text = json_io::canonical_dump(j);
  out << text;
  if (output_path.empty()) return;
  std::ofstream file(output_path, std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write " + output_path);
  file << text;
}

}  // namespace

std::unique_ptr<HallBackend> make_backend(const std::string& id, std::optional<int> q, int size) {
  if (id == "f1") return std::make_unique<VectF1Backend>();
  if (id == "f1t") return std::make_unique<F1tBackend>();
  if (id == "fq" || id.rfind("fq:", 0) == 0) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto colon = id.find(':', start);
      fields.push_back(id.substr(start, colon == std::string::npos ? std::string::npos : colon - start));
      if (colon == std::string::npos) break;
      start = colon + 1;
    }
    if (fields.size() > 3) throw std::invalid_argument("bad backend '" + id + "'");
    if (fields.size() >= 2) {
      const int given = parse_int(fields[1], "field order");
      if (q && *q != given) throw std::invalid_argument("--q disagrees with backend '" + id + "'");
      q = given;
    }
    if (!q) throw std::invalid_argument("backend 'fq' needs a field order");
    const int nilpotency = fields.size() == 3 ? parse_int(fields[2], "nilpotency order") : std::max(size, 1);
    return std::make_unique<FqBackend>(*q, nilpotency);
  }
  throw std::invalid_argument("unknown backend '" + id + "' (expected fq:<q>:<N>, f1 or f1t)");
}

Partition parse_partition_arg(const std::string& text) {
  auto p = Partition::parse(text);
  // Partition drops trailing zeros; a zero part on the command line is an error
  if (std::count(text.begin(), text.end(), ',') + (text.find_first_not_of(" \t") == std::string::npos ? 0 : 1) !=
      p.length())
    throw std::invalid_argument("partition parts must be positive: '" + text + "'");
  return p;
}

Json SuiteReport::to_json() const { return Json{{"cases", cases}, {"failures", failures}, {"suite", suite}}; }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"zelevinsky", "green", "segal", "symfunc", "statistics", "f1-bridge"};
  return names;
}

SuiteReport run_suite(const std::string& suite, const SuiteOptions& options) {
  SuiteReport report;
  report.suite = suite;
  if (options.dim < 0 || options.size < 0 || options.path_size < 0)
    throw std::invalid_argument("bounds must be nonnegative");
  if (suite == "zelevinsky") {
    suite_zelevinsky(report, options);
  } else if (suite == "green") {
    suite_green(report, options);
  } else if (suite == "segal") {
    suite_segal(report, options);
  } else if (suite == "symfunc") {
    suite_symfunc(report, options);
  } else if (suite == "statistics") {
    suite_statistics(report, options);
  } else if (suite == "f1-bridge") {
    suite_f1_bridge(report, options);
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return report;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hall algebra structure constants, symmetric functions and groupoid checks", "hallforge"};
  app.require_subcommand(1);
  std::string output_path;
  std::string cache_dir = env_cache_dir();
  app.add_option("-o,--output", output_path, "Also write the JSON result to this file");
  app.add_option("--cache-dir", cache_dir, "Cache directory (default: $HALLFORGE_CACHE)");

  app.fallthrough();
  auto* mult = app.add_subcommand("hall-mult", "Product of two basis elements");
  std::string backend_id, left_text, right_text;
  std::optional<int> q_opt;
  mult->add_option("--backend", backend_id, "fq:<q>:<N>, f1 or f1t")->required();
  mult->add_option("--left", left_text, "Left factor (the quotient), e.g. 2,1");
  mult->add_option("--right", right_text, "Right factor (the subobject)");
  mult->add_option("--q", q_opt, "Field order for the backend 'fq'");

  auto* poly = app.add_subcommand("hall-poly", "Hall polynomial g^lambda_{mu,nu}(t)");
  std::string lambda_text, mu_text, nu_text;
  poly->add_option("--lambda", lambda_text, "Middle term")->required();
  poly->add_option("--mu", mu_text, "Quotient type")->required();
  poly->add_option("--nu", nu_text, "Subobject type")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  SuiteOptions options;
  std::vector<int> qs;
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--q", qs, "Field orders (repeatable)");
  verify->add_option("--dim", options.dim, "Dimension bound (green, segal)");
  verify->add_option("--size", options.size, "Size bound (zelevinsky, symfunc, statistics, f1-bridge)");
  verify->add_option("--path-size", options.path_size, "Lattice path bound m + n (statistics)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  try {
    if (*mult) {
      const auto left = parse_partition_arg(left_text);
      const auto right = parse_partition_arg(right_text);
      const auto backend = make_backend(backend_id, q_opt, left.size() + right.size());
      for (const auto* p : {&left, &right}) {
        const auto allowed = backend->labels(p->size());
        if (std::find(allowed.begin(), allowed.end(), *p) == allowed.end())
          throw std::invalid_argument(p->to_string() + " is not a label of backend " + backend->id());
      }
      const auto product = hall_multiply(*backend, HallElement::basis(left), HallElement::basis(right));
      out << product.to_string() << "\n";
      emit(Json{{"backend", backend->id()},
                {"left", json_io::to_json(left)},
                {"product", json_io::to_json(product)},
                {"right", json_io::to_json(right)}},
           output_path, out);
      return kSuccess;
    }

    if (*poly) {
      const auto lambda = parse_partition_arg(lambda_text);
      const auto mu = parse_partition_arg(mu_text);
      const auto nu = parse_partition_arg(nu_text);
      std::optional<json_io::HallPolynomialCache> cache;
      if (!cache_dir.empty()) cache.emplace(cache_dir);
      std::optional<QPoly> result;
      if (cache) {
        try {
          result = cache->read(lambda, mu, nu);
        } catch (const json_io::FormatError& e) {
          err << "cache corrupt: " << e.what() << "\n";
          return kCacheCorrupt;
        }
        if (result) {
          // one fresh count at the smallest admissible field guards against stale entries
          const auto points = admissible_sample_points(lambda.size());
          const BigInt q = points.empty() ? BigInt(2) : BigInt(points.front());
          const BigInt fresh = hall_constant_direct(static_cast<int>(q), lambda, mu, nu);
          if (result->eval(q) != fresh) {
            err << "cache corrupt: " << cache->path_for(lambda, mu, nu).string() << " gives " << result->eval(q)
                << " at q=" << q << ", direct count " << fresh << "\n";
            return kCacheCorrupt;
          }
          err << "cache hit: " << cache->path_for(lambda, mu, nu).string() << "\n";
        }
      }
      if (!result) {
        result = hall_polynomial(lambda, mu, nu);
        if (cache) {
          cache->write({lambda, mu, nu, *result});
          err << "cache miss: wrote " << cache->path_for(lambda, mu, nu).string() << "\n";
        }
      }
      out << result->to_string("t") << "\n";
      emit(json_io::to_json(json_io::HallPolynomialEntry{lambda, mu, nu, *result}), output_path, out);
      return kSuccess;
    }

    options.q_values = qs;
    const auto report = run_suite(suite, options);
    emit(report.to_json(), output_path, out);
    return report.passed() ? kSuccess : kVerificationFailed;
  } catch (const BoundError& e) {
    err << "bound exceeded: " << e.what() << "\n";
    return kBoundExceeded;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace hallforge::cli
