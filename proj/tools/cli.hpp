/*
 *   Copyright 2026 The ladderlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file
 *
 * The ladderlab command line. Everything goes through run() so tests can
 * drive it with string streams.
 *
 * Exit codes: 0 success or the property holds, 1 the property fails or
 * violations were found, 2 usage, parse or load errors.
 */

#ifndef LADDERLAB_TOOLS_CLI_HPP
#define LADDERLAB_TOOLS_CLI_HPP

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ladderlab.hpp"

namespace ladderlab::cli {

  /** Thrown for bad arguments discovered after option parsing. */
  class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /** Thrown after the message has been written, to leave with a code. */
  struct Exit {
    int code;
  };

  class Session {
   public:
    Session(std::istream& in, std::ostream& out, std::ostream& err)
        : in_(in), out_(out), err_(err) {}

    std::string model_arg;
    std::size_t depth  = 3;
    std::string format = "text";

    std::ostream& out() {
      return out_;
    }

    /** "builtin:<name>" or a model file path; "-" reads stdin. */
    ModelPtr load_unchecked(std::string const& arg) {
      if (arg.rfind("builtin:", 0) == 0) {
        auto m = builtin_model(arg.substr(8));
        if (!m) {
          throw UsageError("unknown builtin model " + arg.substr(8));
        }
        return m;
      }
      if (arg == "-") {
        return make_model(parse_model(read_stdin(), "stdin"));
      }
      return make_model(load_model_file(arg));
    }

    /** As load_unchecked, but an invalid model is reported and fatal. */
    ModelPtr load_model(std::string const& arg) {
      auto m = load_unchecked(arg);
      if (!m->valid()) {
        err_ << "model " << m->name() << " is invalid:\n";
        report_model(*m, err_);
        throw Exit{2};
      }
      return m;
    }

    static void report_model(KernelModel const& m, std::ostream& os) {
      for (auto const& v : m.violations()) {
        os << v.axiom << ": " << v.message << '\n';
      }
    }

    ModelPtr model() {
      if (!model_) {
        if (model_arg.empty()) {
          throw UsageError("--model is required");
        }
        model_ = load_model(model_arg);
      }
      return model_;
    }

    /** Reads a ladder file; without --model the header names a builtin. */
    Ladder load_ladder(std::string const& path) {
      ModelResolver resolve = [this](std::string const& name) -> ModelPtr {
        if (!model_arg.empty()) {
          return model();
        }
        if (!model_) {
          model_ = builtin_model(name);
        }
        return model_;
      };
      if (path == "-") {
        std::istringstream s(read_stdin());
        return parse_ladder(s, resolve);
      }
      std::ifstream f(path);
      if (!f) {
        throw ParseError("cannot open ladder file " + path);
      }
      try {
        return parse_ladder(f, resolve);
      } catch (ParseError const& e) {
        throw ParseError(path + ": " + e.what());
      }
    }

    std::size_t element(std::string const& name) {
      auto i = model()->find(name);
      if (!i) {
        throw UsageError("unknown element " + name + " in model "
                         + model()->name());
      }
      return *i;
    }

    void require_format(std::initializer_list<char const*> allowed) {
      for (auto a : allowed) {
        if (format == a) {
          return;
        }
      }
      throw UsageError("--format " + format + " not supported here");
    }

   private:
    std::string read_stdin() {
      if (stdin_used_) {
        throw UsageError("stdin can be read only once");
      }
      stdin_used_ = true;
      std::ostringstream s;
      s << in_.rdbuf();
      return s.str();
    }

    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
    ModelPtr      model_;
    bool          stdin_used_ = false;
  };

  inline int cmd_validate_model(Session& s, std::vector<std::string> const& a) {
    if (a.size() > 1) {
      throw UsageError("validate-model takes at most one file");
    }
    std::string const arg = a.empty() ? s.model_arg : a.front();
    if (arg.empty()) {
      throw UsageError("validate-model needs a file or --model");
    }
    ModelPtr const m = s.load_unchecked(arg);
    if (m->valid()) {
      s.out() << "ok " << m->name() << " (" << m->size() << " elements, k0 "
              << m->k0().size() << ", height " << m->height() << ")\n";
      return 0;
    }
    Session::report_model(*m, s.out());
    return 1;
  }

  inline int cmd_validate_ladder(Session& s, std::vector<std::string> const& a,
                                 bool lambda) {
    if (a.size() != 1) {
      throw UsageError("validate-ladder takes one ladder file");
    }
    Ladder const l = s.load_ladder(a[0]);
    auto const   r = lambda ? check_q(eta(l)) : check_phi(l);
    if (r.clean()) {
      s.out() << "ok\n";
      return 0;
    }
    s.out() << r.to_string();
    return 1;
  }

  inline int cmd_eval(Session& s, std::vector<std::string> const& a) {
    if (a.empty()) {
      throw UsageError("eval needs a ladder file");
    }
    Ladder const l = s.load_ladder(a[0]);
    if (a.size() == 1) {
      s.out() << format_ladder(l);
      return 0;
    }
    for (std::size_t i = 1; i < a.size(); ++i) {
      Word const w = Word::parse(a[i]);
      s.out() << w << " -> " << l.model().to_string(l.evaluate(w)) << '\n';
    }
    return 0;
  }

  inline int cmd_lattice_op(Session& s, std::vector<std::string> const& a,
                            bool is_join) {
    if (a.size() != 2) {
      throw UsageError("join/meet take two ladder files");
    }
    Ladder const x = s.load_ladder(a[0]);
    Ladder const y = s.load_ladder(a[1]);
    s.out() << format_ladder(is_join ? join(x, y) : meet(x, y));
    return 0;
  }

  inline int cmd_relate(Session& s, std::vector<std::string> const& a) {
    if (a.size() != 3) {
      throw UsageError("relate takes TAG LADDER LADDER");
    }
    Ladder const x = s.load_ladder(a[1]);
    Ladder const y = s.load_ladder(a[2]);
    if (a[0] == "all") {
      for (Relation r : all_relations) {
        s.out() << relation_name(r) << ' '
                << (related(r, x, y) ? "true" : "false") << '\n';
      }
      return 0;
    }
    auto const r = parse_relation(a[0]);
    if (!r) {
      throw UsageError("unknown relation " + a[0]
                       + " (K, Tl, Tr, Kl, Kr, B or all)");
    }
    bool const holds = related(*r, x, y);
    s.out() << (holds ? "true" : "false") << '\n';
    return holds ? 0 : 1;
  }

  inline int cmd_form(Session& s, std::vector<std::string> const& a,
                      char which) {
    if (a.size() != 1) {
      throw UsageError("expected one ladder file");
    }
    s.require_format({"text", "records"});
    Ladder const l = s.load_ladder(a[0]);
    try {
      ComponentForm const f = which == 'b'   ? b_upper_form(l)
                              : which == '3' ? three_part_form(l)
                                             : component_form(l);
      s.out() << (s.format == "records" ? f.to_records()
                                        : f.to_string() + "\n");
      return 0;
    } catch (DirtyLadder const& e) {
      s.out() << e.report.to_string();
      return 1;
    }
  }

  inline int cmd_enumerate(Session& s, bool count_only) {
    auto const ls = enumerate_phi(s.model(), s.depth);
    if (count_only) {
      s.out() << ls.size() << '\n';
      return 0;
    }
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (i > 0) {
        s.out() << '\n';
      }
      s.out() << format_ladder(ls[i]);
    }
    return 0;
  }

  inline int cmd_family(Session& s, std::vector<std::string> const& a) {
    if (a.size() != 2) {
      throw UsageError("family takes TAG LADDER");
    }
    auto const f = parse_family(a[0]);
    if (!f) {
      throw UsageError("unknown family " + a[0]
                       + " (BO, BO_bar, BLO, BLO_bar)");
    }
    Ladder const l = s.load_ladder(a[1]);
    auto const   r = in_family(*f, l);
    if (r.clean()) {
      s.out() << "ok\n";
      return 0;
    }
    s.out() << r.to_string();
    return 1;
  }

  inline int cmd_embed(Session& s, std::vector<std::string> const& a,
                       bool check) {
    if (a.empty()) {
      throw UsageError("embed needs PK, QK or LRO");
    }
    auto const c = parse_construct(a[0]);
    if (!c) {
      throw UsageError("unknown construct " + a[0]);
    }
    ModelPtr const    m     = s.model();
    std::size_t const nargs = (*c == Construct::LRO ? 0 : 1) + (check ? 0 : 1);
    if (a.size() != 1 + nargs) {
      throw UsageError("wrong number of arguments for embed " + a[0]);
    }
    std::size_t const arg
        = *c == Construct::LRO ? 0 : s.element(a[1]);
    if (check) {
      auto const r = embedding_check(m, *c, arg);
      for (auto const& f : r.failures) {
        s.out() << f << '\n';
      }
      s.out() << (r.ok() ? "ok" : "failed") << " (" << r.pairs
              << " pairs)\n";
      return r.ok() ? 0 : 1;
    }
    std::size_t const u = s.element(a.back());
    try {
      s.out() << format_ladder(construct_fn(m, *c, arg)(u));
    } catch (std::invalid_argument const& e) {
      throw UsageError(e.what());
    }
    return 0;
  }

  inline int cmd_convert(Session& s, std::vector<std::string> const& a) {
    if (a.empty()) {
      throw UsageError("convert needs a word or a pair (i,m)");
    }
    for (auto const& x : a) {
      if (!x.empty() && x.front() == '(') {
        s.out() << gamma_inv(LambdaIndex::parse(x)) << '\n';
      } else {
        s.out() << gamma(Word::parse(x)) << '\n';
      }
    }
    return 0;
  }

  inline int cmd_hasse(Session& s, bool depth_given) {
    s.require_format({"text", "dot"});
    if (!s.model_arg.empty() && !depth_given) {
      s.out() << model_hasse_dot(*s.model());
    } else {
      s.out() << theta_hasse_dot(static_cast<std::uint32_t>(s.depth));
    }
    return 0;
  }

  inline int run(std::vector<std::string> const& args, std::istream& in,
                 std::ostream& out, std::ostream& err) {
    Session  s(in, out, err);
    CLI::App app{"ladderlab: ladders, kernel models and component forms",
                 "ladderlab"};
    app.require_subcommand(1);
    app.fallthrough();
    auto* depth_opt = app.add_option("--depth", s.depth, "stabilization depth")
                          ->check(CLI::NonNegativeNumber);
    app.add_option("--model", s.model_arg,
                   "model file, or builtin:<name> ("
                   "chain2, chain3, orthodox-div12, demo-band, cs)");
    app.add_option("--format", s.format, "text, records or dot")
        ->check(CLI::IsMember({"text", "records", "dot"}));

    std::vector<std::string> pos;
    bool                     lambda     = false;
    bool                     three_part = false;
    bool                     count_only = false;
    bool                     check      = false;

    auto sub = [&](char const* name, char const* help) {
      auto* c = app.add_subcommand(name, help);
      c->add_option("args", pos);
      return c;
    };
    auto* c_vm = sub("validate-model", "check a model file against the axioms");
    auto* c_vl = sub("validate-ladder", "check the ladder conditions");
    c_vl->add_flag("--lambda", lambda, "check the pair-indexed conditions");
    auto* c_ev  = sub("eval", "print a ladder or its values at words");
    auto* c_jn  = sub("join", "pointwise join of two ladders");
    auto* c_mt  = sub("meet", "pointwise meet of two ladders");
    auto* c_rel = sub("relate", "test K, Tl, Tr, Kl, Kr, B (or all)");
    auto* c_cf  = sub("component-form", "symbolic component form");
    c_cf->add_flag("--three-part", three_part,
                   "split off the band block for ladders without bands");
    auto* c_bu  = sub("b-upper", "component form of the band upper bound");
    auto* c_en  = sub("enumerate", "all ladders up to --depth");
    c_en->add_flag("--count", count_only, "print only the number");
    auto* c_fam = sub("family", "family predicate BO, BO_bar, BLO, BLO_bar");
    auto* c_emb = sub("embed", "PK P U | QK Q U | LRO U");
    c_emb->add_flag("--check", check, "check the embedding on its domain");
    auto* c_cv = sub("convert", "word <-> index pair");
    auto* c_hs = sub("hasse", "DOT Hasse diagram of words or of --model");

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }

    try {
      if (c_vm->parsed()) {
        return cmd_validate_model(s, pos);
      }
      if (c_vl->parsed()) {
        return cmd_validate_ladder(s, pos, lambda);
      }
      if (c_ev->parsed()) {
        return cmd_eval(s, pos);
      }
      if (c_jn->parsed() || c_mt->parsed()) {
        return cmd_lattice_op(s, pos, c_jn->parsed());
      }
      if (c_rel->parsed()) {
        return cmd_relate(s, pos);
      }
      if (c_cf->parsed()) {
        return cmd_form(s, pos, three_part ? '3' : 'c');
      }
      if (c_bu->parsed()) {
        return cmd_form(s, pos, 'b');
      }
      if (c_en->parsed()) {
        if (!pos.empty()) {
          throw UsageError("enumerate takes no positional arguments");
        }
        return cmd_enumerate(s, count_only);
      }
      if (c_fam->parsed()) {
        return cmd_family(s, pos);
      }
      if (c_emb->parsed()) {
        return cmd_embed(s, pos, check);
      }
      if (c_cv->parsed()) {
        return cmd_convert(s, pos);
      }
      if (c_hs->parsed()) {
        return cmd_hasse(s, depth_opt->count() > 0);
      }
    } catch (Exit const& e) {
      return e.code;
    } catch (UsageError const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << '\n';
      return 2;
    } catch (ModelError const& e) {
      err << "model error: " << e.what() << '\n';
      return 2;
    } catch (ModelMismatch const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
    return 2;
  }

}  // namespace ladderlab::cli

#endif  // LADDERLAB_TOOLS_CLI_HPP
