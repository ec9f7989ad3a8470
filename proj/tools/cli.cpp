#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "rbd/document.hpp"
#include "rbd/error.hpp"
#include "rbd/hjcf.hpp"
#include "rbd/surgery.hpp"

namespace rbd::cli {

namespace {

int status_for(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::Parse: return kParse;
    case ErrorCategory::Validation: return kValidation;
    case ErrorCategory::Computation: return kComputation;
  }
  return kComputation;
}

std::string describe(const Error& e) { return "error: " + std::string(kind_name(e.kind())) + ": " + e.what(); }

std::string pair_text(const BigInt& a, const BigInt& b) { return "(" + a.str() + "," + b.str() + ")"; }

std::string match_text(const BlowdownMatch& m) {
  return pair_text(m.n, m.m) + " " + orientation_name(m.orientation);
}

void print_chain_info(const HjChain& chain, std::ostream& out) {
  CyclicSingularity s = hj_evaluate(chain);
  std::vector<BigInt> minors = chain_gram_minors(chain);
  bool negdef = true;
  for (std::size_t k = 0; k < minors.size(); ++k) negdef = negdef && minors[k].sign() == (k % 2 == 0 ? -1 : 1);

  out << "chain " << chain.to_string() << "\n";
  out << "length " << chain.length() << "\n";
  out << "singularity 1/" << s.p() << "(1," << s.q() << ")  (p,q) = " << pair_text(s.p(), s.q()) << "\n";
  out << "gram determinant " << minors.back() << (negdef ? " (negative definite)" : " (not negative definite)")
      << "\n";
  Recognition rec = recognize_blowdown(chain);
  if (!rec) {
    out << "not a blowdown chain\n";
    return;
  }
  out << "recognized " << match_text(*rec.best);
  if (rec.alternate) out << "; alternate " << match_text(*rec.alternate);
  out << "\n";
}

struct Outcome {
  int status = kOk;
  std::string out;
  std::string err;
};

Outcome run_blowdown_one(const std::string& path, const std::string& stdin_text, bool as_json, int precision) {
  Outcome o;
  std::string text;
  if (path == "-") {
    text = stdin_text;
  } else {
    std::ifstream f(path);
    if (!f) {
      o.status = kUsage;
      o.err = "error: cannot open '" + path + "'\n";
      return o;
    }
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  try {
    ManifoldSpec spec = parse_spec_document(text);
    BlowdownReport report = rational_blowdown(spec);
    o.out = as_json ? report_to_json(report, precision) + "\n" : render_report_text(report, precision);
  } catch (const Error& e) {
    o.status = status_for(e);
    o.err = (path == "-" ? std::string("<stdin>") : path) + ": " + describe(e) + "\n";
  }
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rational-blowdown calculator", "rbd"};
  app.require_subcommand(1);

  auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung chain of 1/p(1,q), or of a blowdown type (n, m)");
  std::vector<std::string> hj_ints;
  std::string hj_chain;
  bool hj_nm = false;
  hj->add_option("values", hj_ints, "p q (or n m with --nm)");
  hj->add_option("--chain", hj_chain, "comma-separated chain entries, e.g. 5,2");
  hj->add_flag("--nm", hj_nm, "read the two integers as a blowdown type (n, m)");

  auto* blowdown = app.add_subcommand("blowdown", "rational blowdown of the chains in spec documents");
  std::vector<std::string> files;
  bool as_json = false;
  int precision = 12;
  blowdown->add_option("files", files, "spec documents ('-' for standard input)")->required();
  blowdown->add_flag("--json", as_json, "machine-readable report");
  blowdown->add_option("--precision", precision, "significant digits of decimal values")->check(CLI::Range(1, 60));

  auto* en = app.add_subcommand("en", "blowdown of the (-n,-2,...,-2) chains in E(n)");
  int en_n = 0;
  bool both = false;
  en->add_option("n", en_n, "n >= 4")->required();
  en->add_flag("--both", both, "blow down both chains");
  en->add_flag("--json", as_json, "machine-readable report");
  en->add_option("--precision", precision, "significant digits of decimal values")->check(CLI::Range(1, 60));

  auto* prop41 = app.add_subcommand("prop41", "divisor computation on the collapsed E(n), n >= 4");
  int p41_n = 0;
  prop41->add_option("n", p41_n, "n >= 4")->required();
  prop41->add_flag("--json", as_json, "machine-readable report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*hj) {
      if (!hj_chain.empty()) {
        if (!hj_ints.empty()) throw CLI::ValidationError("hj", "give either p q or --chain, not both");
        std::vector<BigInt> coeffs;
        std::stringstream ss(hj_chain);
        std::string item;
        while (std::getline(ss, item, ',')) coeffs.push_back(parse_bigint(item));
        print_chain_info(HjChain(std::move(coeffs)), out);
        return kOk;
      }
      if (hj_ints.size() != 2) throw CLI::ValidationError("hj", "expected two integers or --chain");
      BigInt a = parse_bigint(hj_ints[0]);
      BigInt b = parse_bigint(hj_ints[1]);
      if (hj_nm) {
        BlowdownChain c = blowdown_chain(a, b);
        out << "blowdown type " << pair_text(c.n, c.m) << " -> 1/" << c.n * c.n << "(1," << c.n * c.m - 1 << ")\n";
        print_chain_info(c.chain, out);
      } else {
        print_chain_info(hj_expand(CyclicSingularity(a, b)), out);
      }
      return kOk;
    }

    if (*blowdown) {
      std::string stdin_text;
      if (std::find(files.begin(), files.end(), "-") != files.end()) {
        stdin_text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      }
      // Independent documents; the pipeline is pure, output keeps input order.
      std::vector<std::future<Outcome>> jobs;
      for (const auto& f : files) {
        jobs.push_back(std::async(std::launch::async, run_blowdown_one, f, std::cref(stdin_text), as_json, precision));
      }
      int status = kOk;
      bool array = as_json && files.size() > 1;
      bool first = true;
      if (array) out << "[\n";
      for (auto& job : jobs) {
        Outcome o = job.get();
        if (!o.out.empty()) {
          if (array && !first) out << ",\n";
          out << o.out;
          if (!as_json && files.size() > 1) out << "\n";
          first = false;
        }
        err << o.err;
        if (status == kOk) status = o.status;
      }
      if (array) out << "]\n";
      return status;
    }

    if (*en) {
      auto [spec, report] = en_family(en_n, both ? EnMode::BothChains : EnMode::OneChain);
      if (as_json) {
        out << "{\n\"spec\": " << spec_to_json(spec) << ",\n\"report\": " << report_to_json(report, precision)
            << "\n}\n";
      } else {
        out << "spec:\n" << spec_to_json(spec) << "\n\n" << render_report_text(report, precision);
      }
      return kOk;
    }

    if (*prop41) {
      if (p41_n < 4) throw Error(ErrorKind::InvalidParameters, "prop41 needs n >= 4");
      Prop41Report r = p41_n == 4 ? gompf_x4() : verify_prop41(p41_n);
      out << (as_json ? prop41_to_json(r) + "\n" : render_prop41_text(r));
      return r.passed() ? kOk : kComputation;
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << describe(e) << "\n";
    return status_for(e);
  }
  return kUsage;
}

}  // namespace rbd::cli
