#include "hchain/sine_transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace hchain {
namespace {

// FFTW's planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class Rodft00Plan {
 public:
  explicit Rodft00Plan(int n) : n_(n) {
    in_ = fftw_alloc_real(n);
    out_ = fftw_alloc_real(n);
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_r2r_1d(n, in_, out_, FFTW_RODFT00, FFTW_ESTIMATE);
  }
  ~Rodft00Plan() {
    {
      std::lock_guard lock(planner_mutex());
      fftw_destroy_plan(plan_);
    }
    fftw_free(in_);
    fftw_free(out_);
  }
  Rodft00Plan(const Rodft00Plan&) = delete;
  Rodft00Plan& operator=(const Rodft00Plan&) = delete;

  // out_k = 2 sum_j in_j sin(pi (j+1)(k+1) / (n+1))
  void run(const double* in, double* out) {
    std::copy(in, in + n_, in_);
    fftw_execute(plan_);
    std::copy(out_, out_ + n_, out);
  }

 private:
  int n_;
  double* in_ = nullptr;
  double* out_ = nullptr;
  fftw_plan plan_ = nullptr;
};

Rodft00Plan& plan_for(int n) {
  thread_local std::map<int, std::unique_ptr<Rodft00Plan>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Rodft00Plan>(n);
  return *slot;
}

}  // namespace

Eigen::VectorXd dst1(const Eigen::VectorXd& in) {
  const int n = static_cast<int>(in.size());
  Eigen::VectorXd out(n);
  if (n == 0) return out;
  plan_for(n).run(in.data(), out.data());
  out *= 0.5 * std::sqrt(2.0 / (n + 1));
  return out;
}

Eigen::VectorXd dst1_naive(const Eigen::VectorXd& in) {
  const int n = static_cast<int>(in.size());
  const double scale = std::sqrt(2.0 / (n + 1));
  Eigen::VectorXd out(n);
  for (int j = 1; j <= n; ++j) {
    double acc = 0.0;
    for (int i = 1; i <= n; ++i) {
      // reduce i*j mod 2(n+1) so the sine argument stays in [0, 2 pi)
      const long long ij = static_cast<long long>(i) * j % (2LL * (n + 1));
      acc += in[i - 1] * std::sin(std::numbers::pi * static_cast<double>(ij) / (n + 1));
    }
    out[j - 1] = scale * acc;
  }
  return out;
}

}  // namespace hchain
