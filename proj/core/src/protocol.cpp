#include "sss/protocol.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sss::proto {

namespace {

using shamir::BigInt;
using shamir::BitVector;
using shamir::FieldParams;
using shamir::SharePoint;

// [first, last) entry range of one dealing section. dealing = -1 means
// the last one.
std::pair<std::size_t, std::size_t> dealing_section(const Transcript& t,
                                                    int dealing) {
  std::ptrdiff_t start = -1;
  int found_seq = -1;
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    const auto* m = std::get_if<Marker>(&t.entries[i]);
    if (!m) continue;
    if (m->kind == "DEAL" && (dealing < 0 || m->value == dealing)) {
      start = static_cast<std::ptrdiff_t>(i);
      found_seq = m->value;
      if (dealing >= 0) break;
    }
  }
  if (start < 0)
    throw ProtocolCorruption("transcript has no dealing " +
                             (dealing < 0 ? std::string("(none present)")
                                          : std::to_string(dealing)));
  std::size_t end = t.entries.size();
  for (std::size_t i = static_cast<std::size_t>(start) + 1;
       i < t.entries.size(); ++i) {
    if (std::holds_alternative<Marker>(t.entries[i])) {
      end = i;
      break;
    }
  }
  (void)found_seq;
  return {static_cast<std::size_t>(start) + 1, end};
}

std::vector<Word> section_words(const Transcript& t,
                                std::pair<std::size_t, std::size_t> range,
                                int id, const std::string& purpose) {
  std::vector<Word> out;
  for (std::size_t i = range.first; i < range.second; ++i)
    if (const auto* w = std::get_if<PubWord>(&t.entries[i]))
      if (w->to == id && w->purpose == purpose) out.push_back(w->word);
  return out;
}

BigInt section_xcoord(const Transcript& t,
                      std::pair<std::size_t, std::size_t> range, int id) {
  for (std::size_t i = range.first; i < range.second; ++i)
    if (const auto* x = std::get_if<XCoord>(&t.entries[i]))
      if (x->to == id) return x->x;
  throw ProtocolCorruption("no x-coordinate for participant " +
                           std::to_string(id) + " in dealing");
}

void check_distinct_ids(const std::vector<Participant>& ps) {
  std::set<int> ids;
  for (const Participant& p : ps)
    if (!ids.insert(p.id).second)
      throw PreconditionError("duplicate participant id");
}

Rng deal_rng(const SchemeParams& params, int seq) {
  return Rng(params.seed).derive("deal/" + std::to_string(seq));
}

}  // namespace

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::nn:
      return "nn";
    case Scheme::kn_binary:
      return "kn-bin";
    case Scheme::kn_shortlex:
      return "kn-shortlex";
  }
  throw PreconditionError("unknown scheme");
}

Scheme parse_scheme(const std::string& name) {
  if (name == "nn") return Scheme::nn;
  if (name == "kn-bin") return Scheme::kn_binary;
  if (name == "kn-shortlex") return Scheme::kn_shortlex;
  throw MalformedInput("unknown scheme: " + name);
}

SetupResult setup(const SchemeParams& params) {
  if (params.n < 1) throw PreconditionError("need at least one participant");
  if (params.scheme != Scheme::nn &&
      (params.k < 2 || params.k > params.n))
    throw PreconditionError("threshold k must satisfy 2 <= k <= n");
  if (params.pad_target < 2)
    throw PreconditionError("pad target too small");
  FieldParams fp{params.p};  // validates primality up front
  if (params.scheme != Scheme::nn && params.p <= params.n)
    throw PreconditionError("prime must exceed the number of participants");

  Rng root(params.seed);
  DealerState dealer(params);
  std::vector<Participant> participants;
  Transcript t;
  t.params = params;

  for (int i = 1; i <= params.n; ++i) {
    Rng sub = root.derive("setup/pres/" + std::to_string(i));
    Presentation pres = random_small_cancellation(params.gen, sub);
    dealer.pres_.push_back(pres);
    dealer.xs_.push_back(i);
    t.entries.push_back(PrivMessage{i, pres});
    t.entries.push_back(XCoord{i, BigInt(i)});
    participants.push_back(Participant{i, pres, BigInt(i)});
  }
  return SetupResult{std::move(dealer), std::move(participants), std::move(t)};
}

void deal_nn(DealerState& dealer, const BitVector& secret, Transcript& t) {
  const SchemeParams& params = dealer.params_;
  if (secret.bits.empty()) throw PreconditionError("empty secret");
  const int seq = ++dealer.deal_seq_;
  Rng rng = deal_rng(params, seq);
  t.entries.push_back(Marker{"DEAL", seq});

  Rng split_rng = rng.derive("split");
  auto shares = shamir::split_xor(secret, params.n, split_rng);
  for (int i = 1; i <= params.n; ++i) {
    Rng enc = rng.derive("enc/" + std::to_string(i));
    auto words = camo::encode_bits(shares[i - 1].bits, dealer.pres_[i - 1],
                                   params.pad_target, enc);
    for (Word& w : words) t.entries.push_back(PubWord{i, "NN-BIT", std::move(w)});
  }
}

BitVector recover_nn(const std::vector<Participant>& participants,
                     const Transcript& t, int dealing) {
  check_distinct_ids(participants);
  const int n = t.params.n;
  if (static_cast<int>(participants.size()) < n)
    throw AccessDenied("the (n,n) scheme requires all " + std::to_string(n) +
                       " participants");
  auto range = dealing_section(t, dealing);
  std::vector<BitVector> shares;
  for (const Participant& p : participants) {
    auto words = section_words(t, range, p.id, "NN-BIT");
    if (words.empty())
      throw ProtocolCorruption("no share words for participant " +
                               std::to_string(p.id));
    shares.push_back(BitVector{camo::decode_bits(words, p.pres)});
  }
  return shamir::xor_combine(shares);
}

void deal_kn_binary(DealerState& dealer, const BigInt& secret, Transcript& t) {
  const SchemeParams& params = dealer.params_;
  const int seq = ++dealer.deal_seq_;
  Rng rng = deal_rng(params, seq);
  t.entries.push_back(Marker{"DEAL", seq});

  FieldParams fp{params.p};
  Rng poly_rng = rng.derive("poly");
  auto f = shamir::random_polynomial(secret, params.k, fp, poly_rng);
  for (int i = 1; i <= params.n; ++i) {
    BigInt y = shamir::evaluate(f, dealer.xs_[i - 1], fp);
    t.entries.push_back(XCoord{i, dealer.xs_[i - 1]});
    Rng enc = rng.derive("enc/" + std::to_string(i));
    auto words = camo::encode_bits(shamir::field_to_bits(y, fp).bits,
                                   dealer.pres_[i - 1], params.pad_target, enc);
    for (Word& w : words) t.entries.push_back(PubWord{i, "KN-BIT", std::move(w)});
  }
}

shamir::BigInt recover_kn_binary(const std::vector<Participant>& subset,
                                 const Transcript& t, int dealing) {
  check_distinct_ids(subset);
  if (static_cast<int>(subset.size()) < t.params.k)
    throw AccessDenied("need at least k participants");
  auto range = dealing_section(t, dealing);
  FieldParams fp{t.params.p};
  std::vector<SharePoint> points;
  for (const Participant& p : subset) {
    auto words = section_words(t, range, p.id, "KN-BIT");
    if (words.empty())
      throw ProtocolCorruption("no share words for participant " +
                               std::to_string(p.id));
    BitVector bits{camo::decode_bits(words, p.pres)};
    points.push_back(
        SharePoint{section_xcoord(t, range, p.id), shamir::bits_to_field(bits, fp)});
  }
  return shamir::interpolate_secret(points, t.params.k, fp);
}

void deal_kn_shortlex(DealerState& dealer, const BigInt& secret,
                      Transcript& t) {
  const SchemeParams& params = dealer.params_;
  const int seq = ++dealer.deal_seq_;
  Rng rng = deal_rng(params, seq);
  t.entries.push_back(Marker{"DEAL", seq});

  FieldParams fp{params.p};
  Rng poly_rng = rng.derive("poly");
  auto f = shamir::random_polynomial(secret, params.k, fp, poly_rng);

  std::set<BigInt> used(dealer.xs_.begin(), dealer.xs_.end());
  for (int i = 1; i <= params.n; ++i) {
    const Presentation& pres = dealer.pres_[i - 1];
    BigInt x = dealer.xs_[i - 1];
    BigInt candidate = 1;
    long long guard = 0;
    for (;;) {
      BigInt y = shamir::evaluate(f, x, fp);
      Word s = shortlex::unrank(y, pres.alphabet_size());
      if (!s.empty() &&
          static_cast<int>(s.size()) <= params.max_share_length &&
          dehn::is_dehn_reduced(s, pres))
        break;
      // degenerate share word: assign the next unused x-coordinate
      while (used.count(candidate)) ++candidate;
      if (candidate >= fp.p() || ++guard > 1000000)
        throw ProtocolCorruption("exhausted x-coordinate candidates");
      used.erase(x);
      x = candidate;
      used.insert(x);
    }
    dealer.xs_[i - 1] = x;
    t.entries.push_back(XCoord{i, x});

    BigInt y = shamir::evaluate(f, x, fp);
    Word s = shortlex::unrank(y, pres.alphabet_size());
    Rng pad_rng = rng.derive("pad/" + std::to_string(i));
    Word w = camo::pad_word(s, pres, params.pad_target, pad_rng);
    t.entries.push_back(PubWord{i, "KN-SHORTLEX", std::move(w)});
  }
}

SharePoint recover_share_shortlex(const Participant& participant,
                                  const Transcript& t, int dealing) {
  auto range = dealing_section(t, dealing);
  auto words = section_words(t, range, participant.id, "KN-SHORTLEX");
  if (words.size() != 1)
    throw ProtocolCorruption("expected exactly one share word for participant " +
                             std::to_string(participant.id));
  Word s = dehn::dehn_reduce(words[0], participant.pres);
  if (static_cast<int>(s.size()) > t.params.max_share_length)
    throw ProtocolCorruption("reduced share exceeds the maximum share length");
  return SharePoint{section_xcoord(t, range, participant.id),
                    shortlex::rank(s)};
}

shamir::BigInt recover_kn_shortlex(const std::vector<Participant>& subset,
                                   const Transcript& t, int dealing) {
  check_distinct_ids(subset);
  if (static_cast<int>(subset.size()) < t.params.k)
    throw AccessDenied("need at least k participants");
  std::vector<SharePoint> points;
  for (const Participant& p : subset)
    points.push_back(recover_share_shortlex(p, t, dealing));
  return recover_secret(points, t.params.k, FieldParams{t.params.p});
}

shamir::BigInt recover_secret(const std::vector<SharePoint>& points, int k,
                              const FieldParams& fp) {
  return shamir::interpolate_secret(points, k, fp);
}

void apply_update(Participant& participant, const std::vector<Word>& padded,
                  const SchemeParams& params) {
  std::vector<Word> relators;
  for (const Word& w : padded) {
    Word r = dehn::dehn_reduce(w, participant.pres);
    if (r.empty() || !is_cyclically_reduced(r))
      throw UpdateAborted("recovered relator is not cyclically reduced");
    relators.push_back(std::move(r));
  }
  try {
    Presentation next(params.gen.n, std::move(relators), params.gen.lambda);
    if (!satisfies_metric_condition(next))
      throw UpdateAborted("recovered relator set fails the metric condition");
    participant.pres = std::move(next);
  } catch (const UpdateAborted&) {
    throw;
  } catch (const Error& e) {
    throw UpdateAborted(std::string("recovered relator set invalid: ") +
                        e.what());
  }
}

void update_participant(DealerState& dealer, Participant& participant,
                        Transcript& t) {
  const SchemeParams& params = dealer.params_;
  const int idx = participant.id - 1;
  if (idx < 0 || idx >= params.n)
    throw PreconditionError("unknown participant id");
  const Presentation& old = dealer.pres_[idx];

  Rng rng = Rng(params.seed).derive("epoch/" + std::to_string(dealer.epoch_) +
                                    "/p/" + std::to_string(participant.id));

  // Fresh presentation whose relators survive transport: each must be
  // Dehn-reduced w.r.t. the old relator set.
  std::optional<Presentation> fresh;
  for (int tries = 1; tries <= 100 && !fresh; ++tries) {
    Rng gen_rng = rng.derive("gen/" + std::to_string(tries));
    Presentation cand = random_small_cancellation(params.gen, gen_rng);
    bool transportable = true;
    for (const Word& r : cand.relators())
      if (!dehn::is_dehn_reduced(r, old)) transportable = false;
    if (transportable) fresh = std::move(cand);
  }
  if (!fresh)
    throw GenerationFailure("no transportable replacement relator set", 100);

  std::vector<Word> padded;
  for (std::size_t j = 0; j < fresh->relators().size(); ++j) {
    Rng pad_rng = rng.derive("pad/" + std::to_string(j));
    padded.push_back(camo::pad_word(fresh->relators()[j], old,
                                    params.pad_target, pad_rng));
  }

  apply_update(participant, padded, params);  // throws UpdateAborted on failure
  for (Word& w : padded)
    t.entries.push_back(PubWord{participant.id, "UPDATE", std::move(w)});
  dealer.pres_[idx] = *fresh;
}

void run_update_epoch(DealerState& dealer,
                      std::vector<Participant>& participants, Transcript& t) {
  ++dealer.epoch_;
  t.entries.push_back(Marker{"EPOCH", dealer.epoch_});
  for (Participant& p : participants) update_participant(dealer, p, t);
}

namespace {

std::vector<Participant> replay_until(const Transcript& t,
                                      std::ptrdiff_t stop);

}  // namespace

std::vector<Participant> replay_participants(const Transcript& t,
                                             int dealing) {
  // Index of the marker to stop before.
  std::ptrdiff_t stop = static_cast<std::ptrdiff_t>(t.entries.size());
  if (dealing >= 0) {
    stop = -1;
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
      const auto* m = std::get_if<Marker>(&t.entries[i]);
      if (m && m->kind == "DEAL" && m->value == dealing) {
        stop = static_cast<std::ptrdiff_t>(i);
        break;
      }
    }
    if (stop < 0)
      throw ProtocolCorruption("transcript has no dealing " +
                               std::to_string(dealing));
  } else {
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
      const auto* m = std::get_if<Marker>(&t.entries[i]);
      if (m && m->kind == "DEAL") stop = static_cast<std::ptrdiff_t>(i);
    }
  }
  return replay_until(t, stop);
}

std::vector<Participant> replay_to_end(const Transcript& t) {
  return replay_until(t, static_cast<std::ptrdiff_t>(t.entries.size()));
}

namespace {

std::vector<Participant> replay_until(const Transcript& t,
                                      std::ptrdiff_t stop) {
  std::map<int, Participant> by_id;
  std::map<int, std::vector<Word>> update_buf;
  for (std::ptrdiff_t i = 0; i < stop; ++i) {
    const TranscriptEntry& e = t.entries[static_cast<std::size_t>(i)];
    if (const auto* priv = std::get_if<PrivMessage>(&e)) {
      by_id.insert_or_assign(priv->to,
                             Participant{priv->to, priv->pres, BigInt(0)});
    } else if (const auto* xc = std::get_if<XCoord>(&e)) {
      auto it = by_id.find(xc->to);
      if (it != by_id.end()) it->second.x = xc->x;
    } else if (const auto* pw = std::get_if<PubWord>(&e)) {
      if (pw->purpose != "UPDATE") continue;
      auto& buf = update_buf[pw->to];
      buf.push_back(pw->word);
      if (static_cast<int>(buf.size()) == t.params.gen.num_relators) {
        auto it = by_id.find(pw->to);
        if (it == by_id.end())
          throw ProtocolCorruption("update for unknown participant");
        apply_update(it->second, buf, t.params);
        buf.clear();
      }
    }
  }
  for (const auto& [id, buf] : update_buf)
    if (!buf.empty())
      throw ProtocolCorruption("truncated update for participant " +
                               std::to_string(id));

  std::vector<Participant> out;
  for (auto& [id, p] : by_id) out.push_back(std::move(p));
  return out;
}

}  // namespace

DealerState rebuild_dealer(const Transcript& t) {
  DealerState dealer(t.params);
  std::vector<Participant> end_state = replay_to_end(t);
  if (static_cast<int>(end_state.size()) != t.params.n)
    throw ProtocolCorruption("transcript does not cover all participants");
  for (const Participant& p : end_state) {
    dealer.pres_.push_back(p.pres);
    dealer.xs_.push_back(p.x);
  }
  for (const TranscriptEntry& e : t.entries) {
    if (const auto* m = std::get_if<Marker>(&e)) {
      if (m->kind == "DEAL") dealer.deal_seq_ = std::max(dealer.deal_seq_, m->value);
      if (m->kind == "EPOCH") dealer.epoch_ = std::max(dealer.epoch_, m->value);
    }
  }
  return dealer;
}

// --- transcript text format ---------------------------------------------

std::string Transcript::str() const {
  std::ostringstream out;
  const SchemeParams& p = params;
  out << "HEADER scheme=" << scheme_name(p.scheme) << " n=" << p.n
      << " k=" << p.k << " p=" << p.p.str() << " pad=" << p.pad_target
      << " maxshare=" << p.max_share_length << " gen=" << p.gen.n << "/"
      << p.gen.num_relators << "/" << p.gen.relator_length << " lambda="
      << p.gen.lambda.num << "/" << p.gen.lambda.den << " seed=" << p.seed
      << "\n";
  for (const TranscriptEntry& e : entries) {
    if (const auto* priv = std::get_if<PrivMessage>(&e)) {
      out << "PRIV " << priv->to << " PRESENTATION n="
          << priv->pres.alphabet_size() << " lambda="
          << priv->pres.lambda().num << "/" << priv->pres.lambda().den;
      for (const Word& r : priv->pres.relators()) out << " | " << r.str();
      out << "\n";
    } else if (const auto* xc = std::get_if<XCoord>(&e)) {
      out << "PUB " << xc->to << " XCOORD " << xc->x.str() << "\n";
    } else if (const auto* pw = std::get_if<PubWord>(&e)) {
      out << "PUB " << pw->to << " " << pw->purpose << " " << pw->word.str()
          << "\n";
    } else if (const auto* m = std::get_if<Marker>(&e)) {
      out << m->kind << " " << m->value << "\n";
    }
  }
  return out.str();
}

Transcript Transcript::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("HEADER ", 0) != 0)
    throw MalformedInput("transcript must start with a HEADER line");

  Transcript t;
  {
    std::istringstream hs(line.substr(7));
    std::string field;
    while (hs >> field) {
      auto eq = field.find('=');
      if (eq == std::string::npos)
        throw MalformedInput("bad header field: " + field);
      std::string key = field.substr(0, eq), val = field.substr(eq + 1);
      SchemeParams& p = t.params;
      if (key == "scheme")
        p.scheme = parse_scheme(val);
      else if (key == "n")
        p.n = std::stoi(val);
      else if (key == "k")
        p.k = std::stoi(val);
      else if (key == "p")
        p.p = shamir::BigInt(val);
      else if (key == "pad")
        p.pad_target = std::stoi(val);
      else if (key == "maxshare")
        p.max_share_length = std::stoi(val);
      else if (key == "gen") {
        if (std::sscanf(val.c_str(), "%d/%d/%d", &p.gen.n,
                        &p.gen.num_relators, &p.gen.relator_length) != 3)
          throw MalformedInput("bad gen field: " + val);
      } else if (key == "lambda") {
        if (std::sscanf(val.c_str(), "%d/%d", &p.gen.lambda.num,
                        &p.gen.lambda.den) != 2)
          throw MalformedInput("bad lambda field: " + val);
      } else if (key == "seed")
        p.seed = std::stoull(val);
      else
        throw MalformedInput("unknown header field: " + key);
    }
  }

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "PRIV") {
      int to;
      std::string kind;
      ls >> to >> kind;
      if (kind != "PRESENTATION")
        throw MalformedInput("bad PRIV line: " + line);
      std::string rest;
      std::getline(ls, rest);
      // rest: " n=<n> lambda=a/b | relator | relator ..."
      std::vector<std::string> parts;
      std::size_t pos = 0;
      while (true) {
        std::size_t bar = rest.find('|', pos);
        parts.push_back(rest.substr(pos, bar - pos));
        if (bar == std::string::npos) break;
        pos = bar + 1;
      }
      int n = 0, lnum = 0, lden = 0;
      if (std::sscanf(parts[0].c_str(), " n=%d lambda=%d/%d", &n, &lnum,
                      &lden) != 3)
        throw MalformedInput("bad PRIV presentation header: " + line);
      std::vector<Word> relators;
      for (std::size_t i = 1; i < parts.size(); ++i)
        relators.push_back(Word::parse(parts[i], n));
      t.entries.push_back(PrivMessage{
          to, Presentation(n, std::move(relators), Rational{lnum, lden})});
    } else if (tag == "PUB") {
      int to;
      std::string purpose;
      ls >> to >> purpose;
      std::string rest;
      std::getline(ls, rest);
      if (purpose == "XCOORD") {
        const auto first = rest.find_first_not_of(' ');
        if (first == std::string::npos)
          throw MalformedInput("bad XCOORD line: " + line);
        t.entries.push_back(XCoord{to, shamir::BigInt(rest.substr(first))});
      } else if (purpose == "NN-BIT" || purpose == "KN-BIT" ||
                 purpose == "KN-SHORTLEX" || purpose == "UPDATE") {
        t.entries.push_back(
            PubWord{to, purpose, Word::parse(rest, t.params.gen.n)});
      } else {
        throw MalformedInput("unknown message purpose: " + purpose);
      }
    } else if (tag == "DEAL" || tag == "EPOCH") {
      int v;
      ls >> v;
      t.entries.push_back(Marker{tag, v});
    } else {
      throw MalformedInput("unknown transcript line: " + line);
    }
  }
  return t;
}

}  // namespace sss::proto
