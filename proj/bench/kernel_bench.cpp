// Serial-vs-parallel comparison for the matmul kernels and a full encoder
// pass. Verifies bit-identical outputs on every shape before timing, then
// reports wall time and speedup. Shapes follow the encoder: input projection,
// attention projections, attention score/value products, FFN.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "melpress/encoder.hpp"
#include "melpress/kernels.hpp"
#include "melpress/rng.hpp"
#include "melpress/tensor.hpp"

using namespace melpress;

namespace {

double time_best_of(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

std::vector<double> random_buf(int64_t n, Rng& rng) {
  std::vector<double> v(static_cast<size_t>(n));
  for (auto& x : v) x = rng.gaussian();
  return v;
}

bool identical(const std::vector<double>& a, const std::vector<double>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

struct Shape {
  const char* name;
  int64_t m, k, n;
};

int bench_matmuls(int repeats) {
  // T=500 frames at 10 ms is five seconds of speech through the desk model.
  const std::vector<Shape> shapes = {
      {"input_proj   (T x Din)(Din x d)", 500, 20, 96},
      {"attn_proj    (T x d)(d x d)", 500, 96, 96},
      {"attn_scores  (T x dh)(dh x T)", 500, 24, 500},
      {"attn_values  (T x T)(T x dh)", 500, 500, 24},
      {"ffn_fc1      (T x d)(d x f)", 500, 96, 384},
      {"ffn_fc2      (T x f)(f x d)", 500, 384, 96},
      {"big_square   (768 x 768)^2", 768, 768, 768},
  };

  int mismatches = 0;
  std::printf("%-34s %12s %12s %8s\n", "shape", "serial_ms", "parallel_ms", "speedup");
  for (const auto& s : shapes) {
    Rng rng(42);
    const auto a = random_buf(s.m * s.k, rng);
    const auto b = random_buf(s.k * s.n, rng);
    std::vector<double> c_serial(static_cast<size_t>(s.m * s.n));
    std::vector<double> c_parallel(static_cast<size_t>(s.m * s.n));

    kernels::matmul_serial(a.data(), b.data(), c_serial.data(), s.m, s.k, s.n);
    kernels::set_parallel(true);
    kernels::matmul(a.data(), b.data(), c_parallel.data(), s.m, s.k, s.n);
    if (!identical(c_serial, c_parallel)) {
      std::printf("%-34s OUTPUT MISMATCH\n", s.name);
      ++mismatches;
      continue;
    }

    const double ts = time_best_of(repeats, [&] {
      kernels::matmul_serial(a.data(), b.data(), c_serial.data(), s.m, s.k, s.n);
    });
    const double tp = time_best_of(repeats, [&] {
      kernels::matmul(a.data(), b.data(), c_parallel.data(), s.m, s.k, s.n);
    });
    std::printf("%-34s %12.3f %12.3f %7.2fx\n", s.name, ts * 1e3, tp * 1e3, ts / tp);
  }
  return mismatches;
}

int bench_encode(int repeats) {
  EncoderConfig cfg;  // desk default: L=12, d=96, H=4, f=384
  Rng rng(7);
  const EncoderWeights w = init_encoder(cfg, rng);

  GeneratorSpec gen;
  gen.min_frames = 500;
  gen.max_frames = 500;
  const Utterance utt = generate(gen, 1).front();

  kernels::set_parallel(false);
  const Tensor out_serial = encode(utt.features, w, {}, false, nullptr).taps.back()->value;
  kernels::set_parallel(true);
  const Tensor out_parallel = encode(utt.features, w, {}, false, nullptr).taps.back()->value;
  for (int64_t i = 0; i < out_serial.size(); ++i) {
    if (out_serial.data()[i] != out_parallel.data()[i]) {
      std::printf("encode OUTPUT MISMATCH at flat index %lld\n", static_cast<long long>(i));
      return 1;
    }
  }

  const double ts = time_best_of(repeats, [&] {
    kernels::SerialGuard guard;
    encode(utt.features, w, {}, false, nullptr);
  });
  kernels::set_parallel(true);
  const double tp =
      time_best_of(repeats, [&] { encode(utt.features, w, {}, false, nullptr); });
  std::printf("%-34s %12.3f %12.3f %7.2fx\n", "full encode (12L, T=500)", ts * 1e3, tp * 1e3,
              ts / tp);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  int repeats = 5;
  if (argc > 1) repeats = std::atoi(argv[1]);
  if (repeats < 1) repeats = 1;

#ifdef _OPENMP
  std::printf("OpenMP: %d threads, best of %d repeats\n", omp_get_max_threads(), repeats);
#else
  std::printf("OpenMP unavailable: parallel entry points run the serial loop\n");
#endif

  int failures = bench_matmuls(repeats);
  failures += bench_encode(repeats);
  if (failures > 0) {
    std::printf("%d mismatching shapes\n", failures);
    return 1;
  }
  return 0;
}
