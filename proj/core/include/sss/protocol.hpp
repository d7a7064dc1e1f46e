#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sss/camouflage.hpp"
#include "sss/presentation.hpp"
#include "sss/shamir.hpp"

namespace sss::proto {

enum class Scheme { nn, kn_binary, kn_shortlex };

std::string scheme_name(Scheme s);
Scheme parse_scheme(const std::string& name);

struct SchemeParams {
  Scheme scheme = Scheme::kn_shortlex;
  int n = 3;  // participants
  int k = 2;  // threshold; the (n,n) scheme ignores it
  shamir::BigInt p = shamir::default_share_prime();
  int pad_target = 500;
  int max_share_length = 10;
  GenerationParams gen;
  std::uint64_t seed = 0;
};

// Setup-time private channel message carrying a relator set.
struct PrivMessage {
  int to = 0;  // participant id, 1-based
  Presentation pres;
};

// One published word. Purposes: NN-BIT, KN-BIT, KN-SHORTLEX, UPDATE.
struct PubWord {
  int to = 0;
  std::string purpose;
  Word word;
};

// Published x-coordinate assignment for one dealing.
struct XCoord {
  int to = 0;
  shamir::BigInt x;
};

// Section marker: DEAL <seq> or EPOCH <num>.
struct Marker {
  std::string kind;
  int value = 0;
};

using TranscriptEntry = std::variant<PrivMessage, PubWord, XCoord, Marker>;

// Ordered record of one protocol run. Replaying with the same seed
// reproduces every entry bit-exactly.
struct Transcript {
  SchemeParams params;
  std::vector<TranscriptEntry> entries;

  std::string str() const;
  static Transcript parse(const std::string& text);
};

struct Participant {
  int id = 0;
  Presentation pres;
  shamir::BigInt x;
};

struct SetupResult;

class DealerState {
 public:
  explicit DealerState(SchemeParams params) : params_(std::move(params)) {}

  const SchemeParams& params() const { return params_; }
  const std::vector<Presentation>& presentations() const { return pres_; }
  const std::vector<shamir::BigInt>& xs() const { return xs_; }
  int deal_count() const { return deal_seq_; }
  int epoch_count() const { return epoch_; }

 private:
  friend struct SetupResult;
  friend SetupResult setup(const SchemeParams&);
  friend void deal_nn(DealerState&, const shamir::BitVector&, Transcript&);
  friend void deal_kn_binary(DealerState&, const shamir::BigInt&, Transcript&);
  friend void deal_kn_shortlex(DealerState&, const shamir::BigInt&,
                               Transcript&);
  friend void update_participant(DealerState&, Participant&, Transcript&);
  friend void run_update_epoch(DealerState&, std::vector<Participant>&,
                               Transcript&);
  friend DealerState rebuild_dealer(const Transcript&);

  SchemeParams params_;
  std::vector<Presentation> pres_;
  std::vector<shamir::BigInt> xs_;
  int deal_seq_ = 0;
  int epoch_ = 0;
};

struct SetupResult {
  DealerState dealer;
  std::vector<Participant> participants;
  Transcript transcript;
};

// Generates n independent C'(lambda) presentations, delivers them over
// the private channel, assigns and publishes x-coordinates 1..n.
SetupResult setup(const SchemeParams& params);

// (n,n): XOR-split the secret; per participant, one published word per bit.
void deal_nn(DealerState& dealer, const shamir::BitVector& secret,
             Transcript& t);
shamir::BitVector recover_nn(const std::vector<Participant>& participants,
                             const Transcript& t, int dealing = -1);

// (k,n) binary: Shamir share, publish each share's bits as words.
void deal_kn_binary(DealerState& dealer, const shamir::BigInt& secret,
                    Transcript& t);
shamir::BigInt recover_kn_binary(const std::vector<Participant>& subset,
                                 const Transcript& t, int dealing = -1);

// (k,n) shortlex: one padded word per participant encoding unrank(f(x_i)).
// Participants whose share word is degenerate get a fresh x_i.
void deal_kn_shortlex(DealerState& dealer, const shamir::BigInt& secret,
                      Transcript& t);
shamir::SharePoint recover_share_shortlex(const Participant& participant,
                                          const Transcript& t,
                                          int dealing = -1);
shamir::BigInt recover_kn_shortlex(const std::vector<Participant>& subset,
                                   const Transcript& t, int dealing = -1);

shamir::BigInt recover_secret(const std::vector<shamir::SharePoint>& points,
                              int k, const shamir::FieldParams& fp);

// Relator refresh for one participant: a fresh presentation, each new
// relator padded with the old one and published; the participant reduces,
// validates, and swaps. Validation failure aborts with the old set kept.
void update_participant(DealerState& dealer, Participant& participant,
                        Transcript& t);
void run_update_epoch(DealerState& dealer,
                      std::vector<Participant>& participants, Transcript& t);

// Participant-side half of an update: reduce the padded relators against
// the current presentation and swap if the result is valid.
void apply_update(Participant& participant, const std::vector<Word>& padded,
                  const SchemeParams& params);

// Reconstructs participant states as of the given dealing (default: the
// last one) by walking PRIV, XCOORD, and UPDATE entries in order.
std::vector<Participant> replay_participants(const Transcript& t,
                                             int dealing = -1);

// Participant states after every entry, including trailing update epochs.
std::vector<Participant> replay_to_end(const Transcript& t);

// Dealer state implied by a transcript: current presentations and
// x-coordinates, dealing and epoch counters. Lets the CLI append further
// dealings or epochs to an existing run.
DealerState rebuild_dealer(const Transcript& t);

}  // namespace sss::proto
