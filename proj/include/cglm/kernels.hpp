#pragma once

// Data-parallel inner loops behind the tensor operations. Each instruction set
// provides one table of function pointers; the scalar table is the reference
// that every vector table is equivalence-tested against. The active table is
// chosen once from the host CPU and can be pinned for tests and benchmarks.

#include <cmath>
#include <cstddef>
#include <string_view>

namespace cglm::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
// Widest instruction set the running CPU supports.
Isa detect_isa();

template <class T>
struct Table {
  Isa isa;
  // c[m,n] = (accumulate ? c : 0) + a[m,k] * b[k,n]; row-major with leading
  // dimensions. Each output element sums over k in increasing order.
  void (*gemm)(std::size_t m, std::size_t n, std::size_t k, const T* a, std::size_t lda,
               const T* b, std::size_t ldb, T* c, std::size_t ldc, bool accumulate);
  // As gemm with b stored [n, k] (nt) or a stored [k, m] (tn).
  void (*gemm_nt)(std::size_t m, std::size_t n, std::size_t k, const T* a, std::size_t lda,
                  const T* b, std::size_t ldb, T* c, std::size_t ldc, bool accumulate);
  void (*gemm_tn)(std::size_t m, std::size_t n, std::size_t k, const T* a, std::size_t lda,
                  const T* b, std::size_t ldb, T* c, std::size_t ldc, bool accumulate);
  T (*dot)(const T* a, const T* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(T alpha, const T* x, T* y, std::size_t n);
  void (*add)(const T* a, const T* b, T* out, std::size_t n);
  void (*max)(const T* a, const T* b, T* out, std::size_t n);
  void (*min)(const T* a, const T* b, T* out, std::size_t n);
  // y = gelu(x), tanh form
  void (*gelu)(const T* x, T* y, std::size_t n);
  // dx += dy * gelu'(x)
  void (*gelu_grad)(const T* x, const T* dy, T* dx, std::size_t n);
};

inline constexpr double kGeluC = 0.7978845608028654;  // sqrt(2/pi)
inline constexpr double kGeluA = 0.044715;

template <class T>
T gelu_scalar(T x) {
  const T u = T(kGeluC) * (x + T(kGeluA) * x * x * x);
  return T(0.5) * x * (T(1) + std::tanh(u));
}

template <class T>
T gelu_grad_scalar(T x) {
  const T u = T(kGeluC) * (x + T(kGeluA) * x * x * x);
  const T th = std::tanh(u);
  const T du = T(kGeluC) * (T(1) + T(3 * kGeluA) * x * x);
  return T(0.5) * (T(1) + th) + T(0.5) * x * (T(1) - th * th) * du;
}

template <class T>
const Table<T>& table(Isa isa);

// Table used by the tensor operations. Defaults to detect_isa().
template <class T>
const Table<T>& active();

Isa active_isa();
// Throws ContractError if the CPU lacks `isa`.
void set_active_isa(Isa isa);

// RAII pin of the active instruction set, restoring the previous one on exit.
class ScopedIsa {
 public:
  explicit ScopedIsa(Isa isa) : previous_(active_isa()) { set_active_isa(isa); }
  ~ScopedIsa() { set_active_isa(previous_); }
  ScopedIsa(const ScopedIsa&) = delete;
  ScopedIsa& operator=(const ScopedIsa&) = delete;

 private:
  Isa previous_;
};

// Convenience forms on dense row-major operands using the active table.
// nt: c[m,n] = a[m,k] * b[n,k]^T      tn: c[m,n] = a[k,m]^T * b[k,n]
template <class T>
void matmul_nn(std::size_t m, std::size_t n, std::size_t k, const T* a, const T* b, T* c,
               bool accumulate = false);
template <class T>
void matmul_nt(std::size_t m, std::size_t n, std::size_t k, const T* a, const T* b, T* c,
               bool accumulate = false);
template <class T>
void matmul_tn(std::size_t m, std::size_t n, std::size_t k, const T* a, const T* b, T* c,
               bool accumulate = false);

namespace detail {
template <class T>
const Table<T>& scalar_table();
template <class T>
const Table<T>* avx2_table();  // nullptr when not compiled in
}  // namespace detail

}  // namespace cglm::kernels
