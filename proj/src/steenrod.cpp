#include "ttk/steenrod.hpp"

#include "ttk/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ttk {
namespace steenrod {

unsigned degree(Monomial const& m) {
  unsigned d = 0;
  for (auto i : m) {
    d += i;
  }
  return d;
}

bool is_admissible(Monomial const& m) {
  for (std::size_t j = 0; j + 1 < m.size(); ++j) {
    if (m[j] < 2 * m[j + 1]) {
      return false;
    }
  }
  return m.empty() || m.back() >= 1;
}

Element zero_element() {
  return {};
}

Element unit_element() {
  return {{Monomial{}}};
}

Element sq(unsigned n) {
  if (n == 0) {
    return unit_element();
  }
  return {{Monomial{n}}};
}

namespace {

void normalize(std::vector<Monomial>& v) {
  std::sort(v.begin(), v.end());
  // mod 2: cancel pairs
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) {
      ++j;
    }
    if ((j - i) % 2 == 1) {
      out.push_back(v[i]);
    }
    i = j;
  }
  v = std::move(out);
}

// binom(n, k) mod 2 by Lucas
bool binom_odd(unsigned n, unsigned k) {
  if (k > n) {
    return false;
  }
  return (k & (n - k)) == 0;
}

}  // namespace

Element add(Element const& a, Element const& b) {
  std::vector<Monomial> v = a.support;
  v.insert(v.end(), b.support.begin(), b.support.end());
  normalize(v);
  return {std::move(v)};
}

Element adem_reduce(Monomial const& word) {
  for (auto i : word) {
    if (i == 0) {
      throw_error(Err::BadInput, "Sq^0 in word");
    }
  }
  static thread_local std::map<Monomial, Element> cache;
  auto it = cache.find(word);
  if (it != cache.end()) {
    return it->second;
  }
  Element result;
  // first inadmissible adjacent pair
  std::size_t pos = word.size();
  for (std::size_t j = 0; j + 1 < word.size(); ++j) {
    if (word[j] < 2 * word[j + 1]) {
      pos = j;
      break;
    }
  }
  if (pos == word.size()) {
    result = {{word}};
  } else {
    unsigned a = word[pos], b = word[pos + 1];
    std::vector<Monomial> acc;
    for (unsigned c = 0; 2 * c <= a; ++c) {
      if (!binom_odd(b - c - 1, a - 2 * c)) {
        continue;
      }
      Monomial repl(word.begin(), word.begin() + pos);
      repl.push_back(a + b - c);
      if (c > 0) {
        repl.push_back(c);
      }
      repl.insert(repl.end(), word.begin() + pos + 2, word.end());
      Element part = adem_reduce(repl);
      acc.insert(acc.end(), part.support.begin(), part.support.end());
    }
    normalize(acc);
    result = {std::move(acc)};
  }
  cache[word] = result;
  return result;
}

Element multiply(Element const& a, Element const& b) {
  std::vector<Monomial> acc;
  for (auto const& ma : a.support) {
    for (auto const& mb : b.support) {
      Monomial w = ma;
      w.insert(w.end(), mb.begin(), mb.end());
      Element part = adem_reduce(w);
      acc.insert(acc.end(), part.support.begin(), part.support.end());
    }
  }
  normalize(acc);
  return {std::move(acc)};
}

std::vector<Monomial> const& admissible_basis(unsigned n) {
  static thread_local std::map<unsigned, std::vector<Monomial>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) {
    return it->second;
  }
  std::vector<Monomial> out;
  if (n == 0) {
    out.push_back({});
  } else {
    // prepend a leading exponent a to each admissible tail of degree n-a
    // whose head is at most a/2
    for (unsigned a = 1; a <= n; ++a) {
      if (a == n) {
        out.push_back({a});
        continue;
      }
      for (auto const& tail : admissible_basis(n - a)) {
        if (!tail.empty() && a >= 2 * tail.front()) {
          Monomial m{a};
          m.insert(m.end(), tail.begin(), tail.end());
          out.push_back(m);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return cache[n] = std::move(out);
}

std::size_t dim_A(unsigned n) {
  std::size_t adm = admissible_basis(n).size();
  // Milnor count: partitions of n into parts 2^i - 1 with multiplicity,
  // i.e. solutions of sum r_i (2^i - 1) = n
  std::vector<std::size_t> ways(n + 1, 0);
  ways[0] = 1;
  for (unsigned i = 1; (1u << i) - 1 <= n; ++i) {
    unsigned part = (1u << i) - 1;
    for (unsigned v = part; v <= n; ++v) {
      ways[v] += ways[v - part];
    }
  }
  if (ways[n] != adm) {
    std::ostringstream os;
    os << "degree " << n << ": admissible " << adm << " vs milnor "
       << ways[n];
    throw_error(Err::BasisMismatch, os.str());
  }
  return adm;
}

std::string to_string(Monomial const& m) {
  if (m.empty()) {
    return "1";
  }
  std::ostringstream os;
  os << "Sq(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) {
      os << ",";
    }
    os << m[i];
  }
  os << ")";
  return os.str();
}

std::string to_string(Element const& e) {
  if (e.support.empty()) {
    return "0";
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < e.support.size(); ++i) {
    if (i) {
      os << "+";
    }
    os << to_string(e.support[i]);
  }
  return os.str();
}

Element parse_element(std::string const& s) {
  Element out = zero_element();
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace((unsigned char) s[i])) {
      ++i;
    }
  };
  skip_ws();
  if (i == s.size()) {
    throw_error(Err::BadInput, "empty element expression");
  }
  while (i < s.size()) {
    skip_ws();
    if (s.compare(i, 1, "0") == 0) {
      ++i;
    } else if (s.compare(i, 1, "1") == 0) {
      out = add(out, unit_element());
      ++i;
    } else if (s.compare(i, 3, "Sq(") == 0) {
      i += 3;
      Monomial word;
      while (true) {
        skip_ws();
        std::size_t j = i;
        while (j < s.size() && std::isdigit((unsigned char) s[j])) {
          ++j;
        }
        if (j == i) {
          throw_error(Err::BadInput, "expected exponent in " + s);
        }
        word.push_back((unsigned) std::stoul(s.substr(i, j - i)));
        i = j;
        skip_ws();
        if (i < s.size() && s[i] == ',') {
          ++i;
          continue;
        }
        break;
      }
      if (i >= s.size() || s[i] != ')') {
        throw_error(Err::BadInput, "missing ')' in " + s);
      }
      ++i;
      out = add(out, adem_reduce(word));
    } else {
      throw_error(Err::BadInput, "cannot parse element: " + s);
    }
    skip_ws();
    if (i < s.size()) {
      if (s[i] != '+') {
        throw_error(Err::BadInput, "expected '+' in " + s);
      }
      ++i;
    }
  }
  return out;
}

DegreeBasis free_basis(FreeModule const& F, unsigned t) {
  DegreeBasis b;
  for (std::size_t g = 0; g < F.gens.size(); ++g) {
    if (F.gens[g].degree > t) {
      continue;
    }
    for (auto const& m : admissible_basis(t - F.gens[g].degree)) {
      b.elems.emplace_back(g, m);
    }
  }
  std::sort(b.elems.begin(), b.elems.end());
  for (std::size_t i = 0; i < b.elems.size(); ++i) {
    b.index[b.elems[i]] = i;
  }
  return b;
}

ModulePresentation f2_module(unsigned t_max) {
  ModulePresentation p;
  p.free.gens.push_back({"x", 0});
  for (unsigned n = 1; n <= t_max; ++n) {
    p.rels.push_back({{0, Monomial{n}}});
  }
  return p;
}

TruncatedModule::TruncatedModule(ModulePresentation const& pres,
                                 unsigned t_max)
    : t_max_(t_max) {
  pieces_.resize(t_max + 1);
  for (unsigned t = 0; t <= t_max; ++t) {
    Piece& pc = pieces_[t];
    pc.free_basis = free_basis(pres.free, t);
    std::size_t n = pc.free_basis.elems.size();
    // span of monomial multiples of the relations in degree t
    std::vector<std::vector<bool>> rows;
    for (auto const& rel : pres.rels) {
      unsigned dr = 0;
      for (auto const& term : rel) {
        dr = pres.free.gens[term.first].degree + degree(term.second);
        break;
      }
      if (rel.empty() || dr > t) {
        continue;
      }
      for (auto const& m : admissible_basis(t - dr)) {
        std::vector<bool> row(n, false);
        for (auto const& term : rel) {
          Monomial w = m;
          w.insert(w.end(), term.second.begin(), term.second.end());
          for (auto const& mono : adem_reduce(w).support) {
            auto key = std::make_pair(term.first, mono);
            row[pc.free_basis.index.at(key)] = !row[pc.free_basis.index.at(
                key)];
          }
        }
        rows.push_back(std::move(row));
      }
    }
    gf2::BitMatrix R(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      R.set_row(r, rows[r]);
    }
    pc.rel_pivots = gf2::rref(R);
    pc.rel_rref = std::move(R);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pc.rel_pivots) {
      is_pivot[c] = true;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (!is_pivot[c]) {
        pc.coset_cols.push_back(c);
      }
    }
  }
}

std::size_t TruncatedModule::dim(unsigned t) const {
  if (t > t_max_) {
    throw_error(Err::WindowExceeded, "module degree beyond cap");
  }
  return pieces_[t].coset_cols.size();
}

std::vector<bool> TruncatedModule::reduce_to_coords(
    unsigned t, std::vector<bool> v) const {
  Piece const& pc = pieces_[t];
  for (std::size_t p = 0; p < pc.rel_pivots.size(); ++p) {
    if (v[pc.rel_pivots[p]]) {
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (pc.rel_rref.get(p, c)) {
          v[c] = !v[c];
        }
      }
    }
  }
  std::vector<bool> coords(pc.coset_cols.size(), false);
  for (std::size_t i = 0; i < pc.coset_cols.size(); ++i) {
    coords[i] = v[pc.coset_cols[i]];
  }
  return coords;
}

gf2::BitMatrix TruncatedModule::sq_action(unsigned j, unsigned t) const {
  if (t + j > t_max_) {
    throw_error(Err::WindowExceeded, "Sq action beyond cap");
  }
  Piece const& src = pieces_[t];
  Piece const& dst = pieces_[t + j];
  gf2::BitMatrix A(src.coset_cols.size(), dst.coset_cols.size());
  for (std::size_t r = 0; r < src.coset_cols.size(); ++r) {
    auto const& [g, m] = src.free_basis.elems[src.coset_cols[r]];
    std::vector<bool> img(dst.free_basis.elems.size(), false);
    if (j == 0) {
      img[dst.free_basis.index.at({g, m})] = true;
    } else {
      Monomial w{j};
      w.insert(w.end(), m.begin(), m.end());
      for (auto const& mono : adem_reduce(w).support) {
        auto idx = dst.free_basis.index.at({g, mono});
        img[idx] = !img[idx];
      }
    }
    A.set_row(r, reduce_to_coords(t + j, std::move(img)));
  }
  return A;
}

}  // namespace steenrod
}  // namespace ttk
