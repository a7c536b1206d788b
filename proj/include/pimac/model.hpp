#ifndef PIMAC_MODEL_HPP
#define PIMAC_MODEL_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pimac {

// Channel with two MAC transmitters (1, 2) served by receiver 1 and a
// point-to-point transmitter 3 served by receiver 2:
//
//   Y1 =     X1 +     X2 + h31 X3 + Z1
//   Y2 = h12 X1 + h22 X2 +     X3 + Z2,   Z1, Z2 ~ N(0, 1)
//
// Powers are linear SNRs relative to the unit noise variance. Gains are
// amplitudes; every rate formula only ever sees their squares.
template <typename Scalar>
struct BasicChannelParams {
  Scalar p1{0}, p2{0}, p3{0};
  Scalar h12{0}, h22{0}, h31{0};

  Scalar power(int tx) const {
    switch (tx) {
      case 1: return p1;
      case 2: return p2;
      case 3: return p3;
      default: throw std::domain_error("transmitter id must be 1, 2 or 3");
    }
  }

  // Throws std::domain_error naming the first offending field.
  void validate() const {
    auto check_power = [](Scalar v, const char* name) {
      if (!std::isfinite(v) || v < 0)
        throw std::domain_error(std::string(name) + " must be a finite nonnegative power");
    };
    auto check_gain = [](Scalar v, const char* name) {
      if (!std::isfinite(v)) throw std::domain_error(std::string(name) + " must be a finite gain");
    };
    check_power(p1, "p1");
    check_power(p2, "p2");
    check_power(p3, "p3");
    check_gain(h12, "h12");
    check_gain(h22, "h22");
    check_gain(h31, "h31");
  }

  bool operator==(const BasicChannelParams&) const = default;
};

using ChannelParams = BasicChannelParams<double>;

enum class Receiver : int { one = 1, two = 2 };

inline Receiver receiver_from_id(int id) {
  if (id != 1 && id != 2) throw std::domain_error("receiver id must be 1 or 2");
  return static_cast<Receiver>(id);
}

// A subset of {1, 2, 3}. Used both for sets of transmitters and for the
// 0/1 coefficient pattern of a rate constraint (bit i-1 selects R_i).
class Subset {
 public:
  constexpr Subset() = default;

  static Subset from_bits(unsigned bits) {
    if (bits > 7u) throw std::domain_error("subset bits out of range");
    Subset s;
    s.bits_ = static_cast<std::uint8_t>(bits);
    return s;
  }

  Subset(std::initializer_list<int> ids) {
    for (int id : ids) {
      if (id < 1 || id > 3) throw std::domain_error("transmitter id must be 1, 2 or 3");
      bits_ |= static_cast<std::uint8_t>(1u << (id - 1));
    }
  }

  // "110" selects {1, 2}: character k is '1' iff R_{k+1} participates.
  static Subset from_string(std::string_view mask) {
    if (mask.size() != 3) throw std::domain_error("subset mask must have three characters");
    unsigned bits = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      if (mask[k] == '1')
        bits |= 1u << k;
      else if (mask[k] != '0')
        throw std::domain_error("subset mask must contain only '0' and '1'");
    }
    return from_bits(bits);
  }

  static Subset all() { return from_bits(7u); }

  std::string str() const {
    std::string s(3, '0');
    for (int k = 0; k < 3; ++k)
      if (bits_ & (1u << k)) s[k] = '1';
    return s;
  }

  constexpr unsigned bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int id) const { return id >= 1 && id <= 3 && (bits_ >> (id - 1)) & 1u; }
  constexpr bool includes(Subset other) const { return (bits_ & other.bits_) == other.bits_; }
  constexpr int size() const { return (bits_ & 1u) + ((bits_ >> 1) & 1u) + ((bits_ >> 2) & 1u); }

  friend constexpr Subset operator|(Subset a, Subset b) {
    Subset s;
    s.bits_ = a.bits_ | b.bits_;
    return s;
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    Subset s;
    s.bits_ = a.bits_ & b.bits_;
    return s;
  }
  friend constexpr bool operator==(Subset, Subset) = default;

 private:
  std::uint8_t bits_ = 0;
};

// Visits every nonempty T ⊆ s in increasing bit order.
template <typename F>
void for_each_nonempty_subset(Subset s, F&& f) {
  const unsigned full = s.bits();
  for (unsigned t = full; t != 0; t = (t - 1) & full) f(Subset::from_bits(t));
}

template <typename Scalar>
class GainTable {
 public:
  explicit GainTable(const BasicChannelParams<Scalar>& params) : params_(params) {}

  Scalar operator()(int tx, Receiver rx) const {
    if (tx < 1 || tx > 3) throw std::domain_error("transmitter id must be 1, 2 or 3");
    if (rx == Receiver::one) return tx == 3 ? params_.h31 : Scalar(1);
    switch (tx) {
      case 1: return params_.h12;
      case 2: return params_.h22;
      default: return Scalar(1);
    }
  }

 private:
  BasicChannelParams<Scalar> params_;
};

// C(x) = 1/2 log2(1 + x), bits per channel use.
template <typename Scalar>
Scalar cap(Scalar snr) {
  if (!(snr >= Scalar(0))) throw std::domain_error("cap: snr must be nonnegative");
  return std::log1p(snr) / (2 * std::numbers::ln2_v<Scalar>);
}

// Sum over i in `subset` of g(i, rx)^2 P_i.
template <typename Scalar>
Scalar effective_snr(const BasicChannelParams<Scalar>& params, Subset subset, Receiver rx) {
  if (rx != Receiver::one && rx != Receiver::two) throw std::domain_error("receiver id must be 1 or 2");
  const GainTable<Scalar> gains(params);
  Scalar total{0};
  for (int tx = 1; tx <= 3; ++tx) {
    if (!subset.contains(tx)) continue;
    const Scalar g = gains(tx, rx);
    total += g * g * params.power(tx);
  }
  return total;
}

}  // namespace pimac

#endif  // PIMAC_MODEL_HPP
