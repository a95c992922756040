#include "statevol/sampling.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>
#include <thread>

#include "statevol/volumes.hpp"

namespace statevol {

namespace {

constexpr double kRadiusCap = 1.0 - 1e-15;

template <class S>
SelfAdjointState<S> sample_state_impl(int n, RngStream& rng) {
  using T = ScalarTraits<S>;
  constexpr int d = T::components;
  if (n < 2) throw std::domain_error("sample_state requires n >= 2");
  if (n > kMaxDim) throw std::invalid_argument("dimension beyond supported cap");

  double diag[kMaxDim];
  rng.dirichlet(0.5 * d * (n - 1) + 1.0, std::span<double>(diag, static_cast<size_t>(n)));

  DenseMatrix<S> a = DenseMatrix<S>::Zero(n, n);
  a(0, 0) = S(diag[0]);
  for (int j = 1; j < n; ++j) {
    const int dim_r = j * d;  // real dimension of the new column
    double u[kMaxDim * 4];
    rng.unit_sphere(std::span<double>(u, static_cast<size_t>(dim_r)));
    double r2 = rng.beta_variate(0.5 * dim_r, 0.5 * d * (n - 1 - j) + 1.0);
    double r = std::min(std::sqrt(r2), kRadiusCap);

    DenseMatrix<S> root = sqrt_psd(DenseMatrix<S>(a.topLeftCorner(j, j)));
    double scale = std::sqrt(diag[j]) * r;  // sqrt(rho / det A_j) with rho = a_{j+1} det A_j
    for (int i = 0; i < j; ++i) {
      S acc{};
      for (int k = 0; k < j; ++k) acc += root(i, k) * T::from_components(u + d * k);
      acc *= scale;
      a(i, j) = acc;
      a(j, i) = T::conjugate(acc);
    }
    a(j, j) = S(diag[j]);
  }
  return SelfAdjointState<S>{std::move(a)};
}

// one quaternion entry needs d uniform box components; n-1 simplex coords
template <class S>
bool rejection_candidate(int n, RngStream& rng, DenseMatrix<S>& a) {
  using T = ScalarTraits<S>;
  constexpr int d = T::components;
  double diag[kMaxDim];
  rng.dirichlet(1.0, std::span<double>(diag, static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) a(i, i) = S(diag[i]);
  double c[4];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < d; ++k) c[k] = rng.uniform_sym();
      S v = T::from_components(c);
      a(i, j) = v;
      a(j, i) = T::conjugate(v);
    }
  return is_positive_definite(a);
}

template <class S>
std::int64_t rejection_count(int n, std::int64_t quota, std::uint64_t seed, std::uint64_t stream) {
  RngStream rng(seed, stream);
  DenseMatrix<S> a = DenseMatrix<S>::Zero(n, n);
  std::int64_t accepted = 0;
  for (std::int64_t s = 0; s < quota; ++s)
    if (rejection_candidate(n, rng, a)) ++accepted;
  return accepted;
}

std::vector<std::int64_t> stream_quotas(std::int64_t n_samples, int n_streams) {
  std::vector<std::int64_t> q(static_cast<size_t>(n_streams), n_samples / n_streams);
  for (int s = 0; s < n_samples % n_streams; ++s) ++q[static_cast<size_t>(s)];
  return q;
}

double simplex_box_volume(int n) {
  double f = 1.0;
  for (int i = 2; i <= n - 1; ++i) f *= i;
  return 1.0 / f;  // 1/(n-1)!
}

struct MomentSums {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::int64_t used = 0;
  std::int64_t nonfinite = 0;
};

template <class S>
MomentSums functional_stream(int n, std::int64_t quota,
                             const std::function<double(const SelfAdjointState<S>&)>& functional,
                             std::uint64_t seed, std::uint64_t stream) {
  RngStream rng(seed, stream);
  MomentSums acc;
  for (std::int64_t s = 0; s < quota; ++s) {
    SelfAdjointState<S> state = sample_state_impl<S>(n, rng);
    double phi = functional(state);
    if (!std::isfinite(phi)) {
      ++acc.nonfinite;
      continue;
    }
    acc.sum += phi;
    acc.sum_sq += phi * phi;
    ++acc.used;
  }
  return acc;
}

template <class Task>
auto run_streams(int n_streams, Task&& task) {
  using Result = decltype(task(0));
  std::vector<Result> results(static_cast<size_t>(n_streams));
  if (n_streams == 1) {
    results[0] = task(0);
    return results;
  }
  std::vector<std::future<Result>> futures;
  futures.reserve(static_cast<size_t>(n_streams));
  for (int s = 0; s < n_streams; ++s)
    futures.push_back(std::async(std::launch::async, [&task, s] { return task(s); }));
  for (int s = 0; s < n_streams; ++s) results[static_cast<size_t>(s)] = futures[static_cast<size_t>(s)].get();
  return results;
}

}  // namespace

template <class S>
SelfAdjointState<S> sample_state(int n, RngStream& rng) {
  return sample_state_impl<S>(n, rng);
}

template SelfAdjointState<double> sample_state<double>(int, RngStream&);
template SelfAdjointState<std::complex<double>> sample_state<std::complex<double>>(int, RngStream&);
template SelfAdjointState<Quaternion> sample_state<Quaternion>(int, RngStream&);

AnyState sample_state(Field field, int n, RngStream& rng) {
  switch (field) {
    case Field::real: return sample_state<double>(n, rng);
    case Field::complex: return sample_state<std::complex<double>>(n, rng);
    case Field::quaternion: return sample_state<Quaternion>(n, rng);
  }
  throw std::logic_error("unreachable");
}

McEstimate estimate_volume_mc(Field field, int n, std::int64_t n_samples, std::uint64_t seed,
                              int n_streams) {
  if (n < 2) throw std::domain_error("estimate_volume_mc requires n >= 2");
  if (n_samples < 10000) throw std::domain_error("estimate_volume_mc requires at least 1e4 samples");
  if (n_streams < 1) throw std::domain_error("n_streams must be positive");
  auto quotas = stream_quotas(n_samples, n_streams);
  auto counts = run_streams(n_streams, [&](int s) {
    return dispatch_field(field, [&](auto tag) {
      using S = decltype(tag);
      return rejection_count<S>(n, quotas[static_cast<size_t>(s)], seed,
                                static_cast<std::uint64_t>(s));
    });
  });
  std::int64_t accepted = 0;
  for (std::int64_t c : counts) accepted += c;
  if (accepted == 0)
    throw EstimationError("no candidate was accepted; increase the sample count");
  double box = simplex_box_volume(n);
  double rate = static_cast<double>(accepted) / static_cast<double>(n_samples);
  McEstimate est;
  est.value = rate * box;
  est.std_error = std::sqrt(rate * (1.0 - rate) / static_cast<double>(n_samples)) * box;
  est.n_samples = n_samples;
  est.n_accepted = accepted;
  return est;
}

template <class S>
FunctionalEstimate estimate_functional_mc(int n, std::int64_t n_samples,
                                          const std::function<double(const SelfAdjointState<S>&)>& functional,
                                          std::uint64_t seed, int n_streams) {
  if (n_samples < 10000) throw std::domain_error("estimate_functional_mc requires at least 1e4 samples");
  if (n_streams < 1) throw std::domain_error("n_streams must be positive");
  auto quotas = stream_quotas(n_samples, n_streams);
  auto sums = run_streams(n_streams, [&](int s) {
    return functional_stream<S>(n, quotas[static_cast<size_t>(s)], functional, seed,
                                static_cast<std::uint64_t>(s));
  });
  MomentSums total;
  for (const MomentSums& m : sums) {
    total.sum += m.sum;
    total.sum_sq += m.sum_sq;
    total.used += m.used;
    total.nonfinite += m.nonfinite;
  }
  if (total.used == 0) throw EstimationError("every functional evaluation was non-finite");
  double mean = total.sum / static_cast<double>(total.used);
  double var = std::max(total.sum_sq / static_cast<double>(total.used) - mean * mean, 0.0);
  double se = std::sqrt(var / static_cast<double>(total.used));

  FunctionalEstimate out;
  out.mean = McEstimate{mean, se, total.used, -1};
  double vol = volume_lebesgue(field_of<S>, n).value();
  out.integral = McEstimate{mean * vol, se * vol, total.used, -1};
  out.n_nonfinite = total.nonfinite;
  out.warning = total.nonfinite * 1000 > n_samples;
  return out;
}

template FunctionalEstimate estimate_functional_mc<double>(
    int, std::int64_t, const std::function<double(const SelfAdjointState<double>&)>&, std::uint64_t, int);
template FunctionalEstimate estimate_functional_mc<std::complex<double>>(
    int, std::int64_t, const std::function<double(const SelfAdjointState<std::complex<double>>&)>&,
    std::uint64_t, int);
template FunctionalEstimate estimate_functional_mc<Quaternion>(
    int, std::int64_t, const std::function<double(const SelfAdjointState<Quaternion>&)>&, std::uint64_t, int);

FunctionalEstimate estimate_functional_mc(Field field, int n, std::int64_t n_samples,
                                          const std::function<double(const AnyState&)>& functional,
                                          std::uint64_t seed, int n_streams) {
  return dispatch_field(field, [&](auto tag) {
    using S = decltype(tag);
    std::function<double(const SelfAdjointState<S>&)> fn =
        [&functional](const SelfAdjointState<S>& st) { return functional(AnyState(st)); };
    return estimate_functional_mc<S>(n, n_samples, fn, seed, n_streams);
  });
}

std::string sample_csv_header(Field field, int n) {
  std::string h;
  for (int i = 1; i <= n; ++i) h += "a_" + std::to_string(i) + "_" + std::to_string(i) + ",";
  static const char* suffix_r[] = {""};
  static const char* suffix_c[] = {"_re", "_im"};
  static const char* suffix_q[] = {"_w", "_x", "_y", "_z"};
  const char** suffix = field == Field::real ? suffix_r : field == Field::complex ? suffix_c : suffix_q;
  int d = field_dim(field);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 0; k < d; ++k)
        h += "a_" + std::to_string(i) + "_" + std::to_string(j) + suffix[k] + ",";
  h.pop_back();
  return h;
}

template <class S>
std::vector<double> state_components(const SelfAdjointState<S>& state) {
  using T = ScalarTraits<S>;
  const int n = state.dim();
  std::vector<double> out;
  out.reserve(static_cast<size_t>(n + T::components * n * (n - 1) / 2));
  for (int i = 0; i < n; ++i) out.push_back(T::real_part(state.mat(i, i)));
  double c[4];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      T::to_components(state.mat(i, j), c);
      out.insert(out.end(), c, c + T::components);
    }
  return out;
}

template std::vector<double> state_components<double>(const SelfAdjointState<double>&);
template std::vector<double> state_components<std::complex<double>>(
    const SelfAdjointState<std::complex<double>>&);
template std::vector<double> state_components<Quaternion>(const SelfAdjointState<Quaternion>&);

template <class S>
void append_sample_csv(std::ostream& os, const SelfAdjointState<S>& state, int digits) {
  std::vector<double> comps = state_components(state);
  char buf[64];
  for (size_t i = 0; i < comps.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.*g", digits, comps[i]);
    os << buf;
    if (i + 1 < comps.size()) os << ',';
  }
  os << '\n';
}

template void append_sample_csv<double>(std::ostream&, const SelfAdjointState<double>&, int);
template void append_sample_csv<std::complex<double>>(std::ostream&,
                                                      const SelfAdjointState<std::complex<double>>&, int);
template void append_sample_csv<Quaternion>(std::ostream&, const SelfAdjointState<Quaternion>&, int);

}  // namespace statevol
