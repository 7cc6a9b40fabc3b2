#include "modsym/sl2.hpp"

#include <openssl/evp.h>

#include <array>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "modsym/errors.hpp"
#include "modsym/numtheory.hpp"
#include "modsym/reps.hpp"

namespace modsym {

SL2Mat SL2Mat::s() { return {0, -1, 1, 0}; }

SL2Mat SL2Mat::t(const Integer& k) { return {1, k, 0, 1}; }

namespace {

Integer residue(const Integer& v, std::int64_t n) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace

SL2Mat SL2Mat::reduced(std::int64_t n) const {
  return {residue(a, n), residue(b, n), residue(c, n), residue(d, n)};
}

bool SL2Mat::is_identity_mod(std::int64_t n) const {
  return reduced(n) == SL2Mat::identity().reduced(n);
}

std::string SL2Mat::to_string() const {
  std::ostringstream os;
  os << "[[" << a.get_str() << ", " << b.get_str() << "], [" << c.get_str() << ", " << d.get_str() << "]]";
  return os.str();
}

SL2Mat operator*(const SL2Mat& x, const SL2Mat& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

SL2Mat Word::evaluate() const {
  SL2Mat acc;
  const SL2Mat s = SL2Mat::s();
  for (const auto& tok : tokens) {
    if (tok.gen == WordToken::Gen::T)
      acc = acc * SL2Mat::t(tok.power);
    else
      acc = acc * (tok.power == 1 ? s : s.inverse());
  }
  if (negate) acc = acc * (s * s);
  return acc;
}

std::string Word::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& tok : tokens) {
    if (!first) os << " ";
    first = false;
    os << (tok.gen == WordToken::Gen::S ? "S" : "T");
    if (tok.power != 1) os << "^" << tok.power.get_str();
  }
  if (negate) os << (first ? "" : " ") << "S^2";
  if (first && !negate) return "1";
  return os.str();
}

Word decompose(const SL2Mat& gamma) {
  if (gamma.det() != 1) throw DomainError("decompose: determinant is not 1");
  Word w;
  Integer a = gamma.a, b = gamma.b, c = gamma.c, d = gamma.d;
  // gamma = t^q s gamma' with gamma' = s^-1 t^-q gamma = [c, d; qc - a, qd - b].
  while (c != 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    if (q != 0) w.tokens.push_back({WordToken::Gen::T, q});
    w.tokens.push_back({WordToken::Gen::S, 1});
    Integer na = c, nb = d;
    Integer nc = q * c - a, nd = q * d - b;
    a = std::move(na);
    b = std::move(nb);
    c = std::move(nc);
    d = std::move(nd);
  }
  // Now [a b; 0 d] with a = d = +-1.
  if (a == 1) {
    if (b != 0) w.tokens.push_back({WordToken::Gen::T, b});
  } else {
    // -[1 -b; 0 1] = -t^{-b}
    if (b != 0) w.tokens.push_back({WordToken::Gen::T, Integer(-b)});
    w.negate = true;
  }
  return w;
}

std::int64_t sl2_order_closed_form(std::int64_t n) {
  if (n < 1) throw DomainError("SL2 order: n must be positive");
  std::int64_t order = n * n * n;
  for (std::int64_t p : nt::prime_factors(n)) order = order / (p * p) * (p * p - 1);
  return order;
}

namespace {

struct Elem {
  std::int64_t a, b, c, d;
};

std::uint64_t encode(const Elem& g, std::int64_t n) {
  return ((static_cast<std::uint64_t>(g.a) * n + g.b) * n + g.c) * n + g.d;
}

Elem right_s(const Elem& g, std::int64_t n) {
  return {g.b, nt::mod(-g.a, n), g.d, nt::mod(-g.c, n)};
}

Elem right_t(const Elem& g, std::int64_t n) { return {g.a, (g.a + g.b) % n, g.c, (g.c + g.d) % n}; }

Elem identity_elem(std::int64_t n) { return {1 % n, 0, 0, 1 % n}; }

class VisitedSet {
 public:
  explicit VisitedSet(std::int64_t n) {
    const std::uint64_t size = static_cast<std::uint64_t>(n) * n * n * n;
    if (size <= (std::uint64_t{1} << 31)) bits_.assign((size + 63) / 64, 0);
  }
  bool insert(std::uint64_t key) {
    if (bits_.empty()) return set_.insert(key).second;
    std::uint64_t& word = bits_[key >> 6];
    const std::uint64_t mask = std::uint64_t{1} << (key & 63);
    if (word & mask) return false;
    word |= mask;
    return true;
  }

 private:
  std::vector<std::uint64_t> bits_;
  std::unordered_set<std::uint64_t> set_;
};

using Digest = std::array<unsigned char, 32>;

Digest sha256(const std::string& bytes) {
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != out.size())
    throw InternalError("SHA-256 computation failed");
  return out;
}

}  // namespace

std::int64_t enumerate_order(std::int64_t n) {
  if (n < 1) throw DomainError("enumerate_order: n must be positive");
  VisitedSet seen(n);
  std::vector<Elem> queue{identity_elem(n)};
  seen.insert(encode(queue[0], n));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem g = queue[head];
    for (const Elem& h : {right_s(g, n), right_t(g, n)})
      if (seen.insert(encode(h, n))) queue.push_back(h);
  }
  const auto count = static_cast<std::int64_t>(queue.size());
  if (count != sl2_order_closed_form(n))
    throw InternalError("SL2(Z/" + std::to_string(n) + ") search found " + std::to_string(count) +
                        " elements, closed form says " + std::to_string(sl2_order_closed_form(n)));
  return count;
}

LevelCertificate certify_level(const ModularRep& rep, CertifyMode mode) {
  const std::int64_t n = rep.level;
  LevelCertificate cert;
  cert.n = n;
  cert.mode = mode;
  cert.group_order = sl2_order_closed_form(n);

  std::int64_t t_order = 1;
  for (const auto& r : rep.t) t_order = nt::lcm(t_order, r.multiplicative_order());
  cert.t_order_is_n = t_order == n;

  // Stored value per visited element, addressed by state id.
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  ids.reserve(static_cast<std::size_t>(cert.group_order) * 2);
  std::string arena;
  std::vector<std::size_t> offsets{0};
  std::vector<Digest> digests;
  std::string scratch;

  auto store = [&](const Matrix& m) {
    if (mode == CertifyMode::Full) {
      m.serialize(arena);
      offsets.push_back(arena.size());
    } else {
      scratch.clear();
      m.serialize(scratch);
      digests.push_back(sha256(scratch));
    }
  };
  auto matches = [&](std::uint32_t id, const Matrix& m) {
    scratch.clear();
    m.serialize(scratch);
    if (mode == CertifyMode::Full)
      return std::string_view(arena).substr(offsets[id], offsets[id + 1] - offsets[id]) == scratch;
    return digests[id] == sha256(scratch);
  };

  std::deque<std::pair<Elem, Matrix>> queue;
  const Elem start = identity_elem(n);
  const Matrix one = Matrix::identity(static_cast<int>(n), rep.s_level.rows());
  ids.emplace(encode(start, n), 0);
  store(one);
  queue.emplace_back(start, one);

  while (!queue.empty()) {
    auto [g, value] = std::move(queue.front());
    queue.pop_front();
    const Elem next_elem[2] = {right_s(g, n), right_t(g, n)};
    for (int gen = 0; gen < 2; ++gen) {
      Matrix next = gen == 0 ? value * rep.s_level : times_diag(value, rep.t);
      const std::uint64_t key = encode(next_elem[gen], n);
      auto [it, inserted] = ids.emplace(key, static_cast<std::uint32_t>(ids.size()));
      if (inserted) {
        store(next);
        queue.emplace_back(next_elem[gen], std::move(next));
      } else {
        ++cert.collisions_checked;
        if (!matches(it->second, next)) ++cert.mismatches;
      }
    }
  }
  cert.visited = static_cast<std::int64_t>(ids.size());
  cert.passed = cert.mismatches == 0 && cert.visited == cert.group_order && cert.t_order_is_n;

  const std::string ns = std::to_string(n);
  cert.reasoning.push_back("search over SL2(Z/" + ns + ") reached " + std::to_string(cert.visited) + " of " +
                           std::to_string(cert.group_order) + " elements");
  cert.reasoning.push_back(std::to_string(cert.collisions_checked) + " closure edges re-derived a stored value; " +
                           std::to_string(cert.mismatches) + " disagreed" +
                           (mode == CertifyMode::Fingerprint ? " (compared by SHA-256 fingerprint)" : ""));
  if (cert.mismatches == 0 && cert.visited == cert.group_order)
    cert.reasoning.push_back("rho is well defined on SL2(Z/" + ns + "), so Gamma(" + ns + ") lies in ker rho");
  else
    cert.reasoning.push_back("rho does not factor through SL2(Z/" + ns + ")");
  if (cert.t_order_is_n)
    cert.reasoning.push_back("ord(t) = " + ns + ": t^m lies in Gamma(m), so Gamma(m) in ker rho forces " + ns +
                             " | m; the level is exactly " + ns);
  else
    cert.reasoning.push_back("ord(t) = " + std::to_string(t_order) + " differs from n = " + ns);
  return cert;
}

std::vector<Word> gamma_n_words(std::int64_t n, int count, std::uint64_t seed) {
  if (n < 1 || count < 0) throw DomainError("gamma_n_words: bad arguments");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> tpow(-4, 4);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> factors(1, 3);
  std::uniform_int_distribution<int> mult(-3, 3);
  auto random_element = [&] {
    SL2Mat g;
    for (int i = len(rng); i > 0; --i) g = g * (rng() % 2 ? SL2Mat::s() : SL2Mat::t(tpow(rng)));
    return g;
  };
  std::vector<Word> out;
  for (int i = 0; i < count; ++i) {
    SL2Mat prod;
    for (int f = factors(rng); f > 0; --f) {
      int k = 0;
      while (k == 0) k = mult(rng);
      const Integer step = Integer(static_cast<long>(n)) * k;
      const SL2Mat core = rng() % 2 ? SL2Mat::t(step) : SL2Mat{1, 0, step, 1};
      const SL2Mat g = random_element();
      prod = prod * g * core * g.inverse();
    }
    out.push_back(decompose(prod));
  }
  return out;
}

SL2Mat dmatrix(std::int64_t a, std::int64_t n) {
  if (n < 1 || std::gcd(nt::mod(a, n), n) != 1) throw DomainError("dmatrix: a must be a unit mod n");
  const std::int64_t ar = nt::mod(a, n);
  const std::int64_t b = nt::inverse_mod(ar, n);
  const SL2Mat s = SL2Mat::s();
  const SL2Mat ta = SL2Mat::t(static_cast<long>(ar));
  const SL2Mat prod = (ta * s * SL2Mat::t(static_cast<long>(b)) * s * ta * s.inverse()).reduced(n);
  const SL2Mat expected = SL2Mat{static_cast<long>(ar), 0, 0, static_cast<long>(b)}.reduced(n);
  if (!(prod == expected)) throw InternalError("dmatrix identity failed for a = " + std::to_string(a));
  return prod;
}

}  // namespace modsym
