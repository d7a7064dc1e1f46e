// sssim: dealer/participant simulator for group-based secret sharing.
//
// Subcommands: gen-group, deal, recover, update, experiment45.
// Every command is deterministic under --seed. Exit codes: 0 success,
// 2 generation failure, 3 access denied, 4 verification failure, 5 I/O.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sss/protocol.hpp"

namespace {

constexpr int kExitGeneration = 2;
constexpr int kExitAccessDenied = 3;
constexpr int kExitVerification = 4;
constexpr int kExitIo = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sss::IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw sss::IoError("cannot write " + path);
  out << content;
}

sss::Rational parse_lambda(const std::string& text) {
  sss::Rational r;
  if (std::sscanf(text.c_str(), "%d/%d", &r.num, &r.den) != 2)
    throw sss::MalformedInput("lambda must look like 1/6");
  return r;
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> ids;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) ids.push_back(std::stoi(tok));
  return ids;
}

double percentile(std::vector<double> v, double q) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  double idx = q * (v.size() - 1);
  std::size_t lo = static_cast<std::size_t>(idx);
  std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (idx - lo) * (v[hi] - v[lo]);
}

int cmd_gen_group(const sss::GenerationParams& gp, std::uint64_t seed,
                  const std::string& out_path) {
  sss::Rng rng(seed);
  int attempts = 0;
  auto t0 = std::chrono::steady_clock::now();
  sss::Presentation p = sss::random_small_cancellation(gp, rng, &attempts);
  auto t1 = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  write_file(out_path, p.str());
  std::cout << "attempts=" << attempts << " wall_ms=" << ms << " out="
            << out_path << "\n";
  return 0;
}

int cmd_deal(sss::proto::SchemeParams params, const std::string& secret_text,
             const std::string& transcript_path, bool append) {
  using namespace sss::proto;
  Transcript t;
  DealerState dealer(params);
  if (append) {
    t = Transcript::parse(read_file(transcript_path));
    dealer = rebuild_dealer(t);
  } else {
    SetupResult s = setup(params);
    dealer = std::move(s.dealer);
    t = std::move(s.transcript);
  }
  switch (dealer.params().scheme) {
    case Scheme::nn:
      deal_nn(dealer, sss::shamir::BitVector::parse(secret_text), t);
      break;
    case Scheme::kn_binary:
      deal_kn_binary(dealer, sss::shamir::BigInt(secret_text), t);
      break;
    case Scheme::kn_shortlex:
      deal_kn_shortlex(dealer, sss::shamir::BigInt(secret_text), t);
      break;
  }
  write_file(transcript_path, t.str());
  std::cout << "dealt dealing=" << dealer.deal_count() << " transcript="
            << transcript_path << "\n";
  return 0;
}

int cmd_recover(const std::string& transcript_path,
                const std::string& id_list, int dealing) {
  using namespace sss::proto;
  Transcript t = Transcript::parse(read_file(transcript_path));
  auto all = replay_participants(t, dealing);
  std::vector<Participant> subset;
  for (int id : parse_id_list(id_list)) {
    auto it = std::find_if(all.begin(), all.end(),
                           [id](const Participant& p) { return p.id == id; });
    if (it == all.end())
      throw sss::ProtocolCorruption("unknown participant id " +
                                    std::to_string(id));
    subset.push_back(*it);
  }
  switch (t.params.scheme) {
    case Scheme::nn:
      std::cout << recover_nn(subset, t, dealing).str() << "\n";
      break;
    case Scheme::kn_binary:
      std::cout << recover_kn_binary(subset, t, dealing).str() << "\n";
      break;
    case Scheme::kn_shortlex:
      std::cout << recover_kn_shortlex(subset, t, dealing).str() << "\n";
      break;
  }
  return 0;
}

int cmd_update(const std::string& transcript_path) {
  using namespace sss::proto;
  Transcript t = Transcript::parse(read_file(transcript_path));
  DealerState dealer = rebuild_dealer(t);
  auto participants = replay_to_end(t);
  run_update_epoch(dealer, participants, t);
  write_file(transcript_path, t.str());
  std::cout << "epoch=" << dealer.epoch_count() << " transcript="
            << transcript_path << "\n";
  return 0;
}

int cmd_experiment45(int groups, int words_per_group, int max_word_len,
                     int pad_target, std::uint64_t seed) {
  sss::Rng root(seed);
  sss::GenerationParams gp;  // paper platform parameters
  int total = 0, recovered = 0;
  std::vector<double> reduce_ms;
  std::cout << "groups=" << groups << " words_per_group=" << words_per_group
            << " max_word_len=" << max_word_len << " pad_target="
            << pad_target << " seed=" << seed << "\n";
  for (int g = 0; g < groups; ++g) {
    sss::Rng grng = root.derive("group/" + std::to_string(g));
    int attempts = 0;
    sss::Presentation p = sss::random_small_cancellation(gp, grng, &attempts);
    int ok = 0;
    for (int i = 0; i < words_per_group; ++i) {
      sss::Rng wrng = grng.derive("word/" + std::to_string(i));
      // Dehn-reduced word of length < max_word_len
      sss::Word s(gp.n);
      for (;;) {
        int len = 1 + static_cast<int>(wrng.below(max_word_len - 1));
        s = sss::random_reduced_word(gp.n, len, wrng);
        if (sss::dehn::is_dehn_reduced(s, p)) break;
      }
      sss::Word w = sss::camo::pad_word(s, p, pad_target, wrng);
      auto t0 = std::chrono::steady_clock::now();
      sss::Word back = sss::dehn::dehn_reduce(w, p);
      auto t1 = std::chrono::steady_clock::now();
      reduce_ms.push_back(
          std::chrono::duration<double, std::milli>(t1 - t0).count());
      ++total;
      if (back == s) {
        ++ok;
        ++recovered;
      }
    }
    std::cout << "group=" << g << " gen_attempts=" << attempts
              << " recovered=" << ok << "/" << words_per_group << "\n";
  }
  std::cout << "success_rate=" << (total ? 100.0 * recovered / total : 0.0)
            << "% reduce_ms_p50=" << percentile(reduce_ms, 0.50)
            << " reduce_ms_p90=" << percentile(reduce_ms, 0.90)
            << " reduce_ms_p99=" << percentile(reduce_ms, 0.99) << "\n";
  return recovered == total ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group-based secret sharing simulator"};
  app.require_subcommand(1);

  // gen-group
  auto* gen = app.add_subcommand("gen-group", "generate a C'(lambda) presentation");
  sss::GenerationParams gp;
  std::string lambda_text = "1/6";
  std::uint64_t gen_seed = 0;
  std::string gen_out = "presentation.txt";
  gen->add_option("--n", gp.n, "alphabet size")->capture_default_str();
  gen->add_option("--relators", gp.num_relators, "number of relators")
      ->capture_default_str();
  gen->add_option("--length", gp.relator_length, "relator length")
      ->capture_default_str();
  gen->add_option("--lambda", lambda_text, "small cancellation constant")
      ->capture_default_str();
  gen->add_option("--max-attempts", gp.max_attempts, "rejection budget")
      ->capture_default_str();
  gen->add_option("--seed", gen_seed, "rng seed")->capture_default_str();
  gen->add_option("--out", gen_out, "output file")->capture_default_str();

  // deal
  auto* deal = app.add_subcommand("deal", "run a dealing and write a transcript");
  sss::proto::SchemeParams sp;
  std::string scheme_text = "kn-shortlex";
  std::string secret_text;
  std::string prime_text = sss::shamir::default_share_prime().str();
  std::string deal_transcript = "transcript.txt";
  bool append = false;
  deal->add_option("--scheme", scheme_text, "nn | kn-bin | kn-shortlex")
      ->capture_default_str();
  deal->add_option("--n", sp.n, "participants")->capture_default_str();
  deal->add_option("--k", sp.k, "threshold")->capture_default_str();
  deal->add_option("--secret", secret_text,
                   "bit string (nn) or decimal field element")
      ->required();
  deal->add_option("--prime", prime_text, "field modulus")
      ->capture_default_str();
  deal->add_option("--pad-target", sp.pad_target, "published word length")
      ->capture_default_str();
  deal->add_option("--max-share-len", sp.max_share_length,
                   "maximum shortlex share word length")
      ->capture_default_str();
  deal->add_option("--gen-n", sp.gen.n, "platform alphabet size")
      ->capture_default_str();
  deal->add_option("--gen-relators", sp.gen.num_relators, "platform relators")
      ->capture_default_str();
  deal->add_option("--gen-length", sp.gen.relator_length,
                   "platform relator length")
      ->capture_default_str();
  deal->add_option("--seed", sp.seed, "rng seed")->capture_default_str();
  deal->add_option("--transcript", deal_transcript, "transcript path")
      ->capture_default_str();
  deal->add_flag("--append", append,
                 "append a dealing to an existing transcript");

  // recover
  auto* rec = app.add_subcommand("recover", "recover a secret from a transcript");
  std::string rec_transcript, rec_ids;
  int rec_dealing = -1;
  rec->add_option("--transcript", rec_transcript)->required();
  rec->add_option("--participants", rec_ids, "comma-separated ids")->required();
  rec->add_option("--dealing", rec_dealing, "dealing number (default: last)");

  // update
  auto* upd = app.add_subcommand("update", "append a relator update epoch");
  std::string upd_transcript;
  upd->add_option("--transcript", upd_transcript)->required();

  // experiment45
  auto* exp = app.add_subcommand("experiment45",
                                 "platform-group reduction experiment");
  int groups = 10, wpg = 100, maxlen = 10, padt = 500;
  std::uint64_t exp_seed = 0;
  exp->add_option("--groups", groups)->capture_default_str();
  exp->add_option("--words-per-group", wpg)->capture_default_str();
  exp->add_option("--max-word-len", maxlen)->capture_default_str();
  exp->add_option("--pad-target", padt)->capture_default_str();
  exp->add_option("--seed", exp_seed)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      gp.lambda = parse_lambda(lambda_text);
      return cmd_gen_group(gp, gen_seed, gen_out);
    }
    if (deal->parsed()) {
      sp.scheme = sss::proto::parse_scheme(scheme_text);
      sp.p = sss::shamir::BigInt(prime_text);
      return cmd_deal(sp, secret_text, deal_transcript, append);
    }
    if (rec->parsed()) return cmd_recover(rec_transcript, rec_ids, rec_dealing);
    if (upd->parsed()) return cmd_update(upd_transcript);
    if (exp->parsed())
      return cmd_experiment45(groups, wpg, maxlen, padt, exp_seed);
  } catch (const sss::GenerationFailure& e) {
    std::cerr << "generation failure: " << e.what() << "\n";
    return kExitGeneration;
  } catch (const sss::AccessDenied& e) {
    std::cerr << "access denied: " << e.what() << "\n";
    return kExitAccessDenied;
  } catch (const sss::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const sss::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  return 0;
}
