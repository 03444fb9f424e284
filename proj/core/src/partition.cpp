#include "udesign/partition.hpp"

#include <stdexcept>

#include "udesign/padic.hpp"

namespace udesign {

TwoPartPartition::TwoPartPartition(std::uint64_t a, std::uint64_t b) : a_(a), b_(b) {
  if (b == 0 || a < b) {
    throw std::invalid_argument("(" + std::to_string(a) + "," + std::to_string(b) +
                                ") is not a two part partition: need a >= b >= 1");
  }
}

Decomposition decompose(std::uint64_t b, Prime p) {
  if (b == 0) throw std::invalid_argument("decompose requires b >= 1");
  const std::uint32_t beta = p_length(b, p);
  const std::uint64_t unit = prime_power(p, beta);
  return {b / unit, beta, b % unit};
}

PartitionClass classify(const TwoPartPartition& part, Prime p) {
  const std::uint32_t val = valuation(part.a() + 1, p);
  const Decomposition d = decompose(part.b(), p);
  if (val > d.beta) return {PartitionKind::James, 0};
  if (d.alpha == 1 && val < d.beta && d.b_hat < prime_power(p, val)) {
    return {PartitionKind::Pointed, d.b_hat};
  }
  return {PartitionKind::Generic, 0};
}

bool james_alternative(const TwoPartPartition& part, Prime p) {
  const std::uint64_t modulus = prime_power(p, p_length(part.b(), p) + 1);
  return (part.a() + 1) % modulus == 0;
}

std::string to_string(const PartitionClass& cls) {
  switch (cls.kind) {
    case PartitionKind::James:
      return "James";
    case PartitionKind::Pointed:
      return "Pointed(b̂=" + std::to_string(cls.b_hat) + ")";
    case PartitionKind::Generic:
      break;
  }
  return "Generic";
}

}  // namespace udesign
