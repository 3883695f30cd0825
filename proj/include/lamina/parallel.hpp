#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace lamina {

// Worker facility owned by the caller (the CLI sizes it once); library code
// receives it and must not spawn threads of its own. Results are deterministic
// because tasks write to index-addressed slots.
class Parallelism {
 public:
  explicit Parallelism(int degree) : degree_(degree < 1 ? 1 : degree) {}

  int degree() const { return degree_; }

  void for_each(long long n, const std::function<void(long long)>& fn) const {
    if (n <= 0) return;
    int workers = degree_ > n ? static_cast<int>(n) : degree_;
    if (workers <= 1) {
      for (long long i = 0; i < n; ++i) fn(i);
      return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w)
      threads.emplace_back([&, w]() {
        for (long long i = w; i < n; i += workers) fn(i);
      });
    for (auto& t : threads) t.join();
  }

 private:
  int degree_;
};

}  // namespace lamina
