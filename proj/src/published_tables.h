/*
Copyright 2026 The pdakit Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/


#ifndef PDAKIT_SRC_PUBLISHED_TABLES_H_
#define PDAKIT_SRC_PUBLISHED_TABLES_H_

#include <span>

// Comparison tables as originally published, cell text verbatim apart from
// scientific notation written as d.dddde-NN.
namespace pdakit::published {

// P1 against MN for t = k - 3.
struct Tk3Column {
  int k;
  const char* K;
  const char* F_ratio;
  const char* R_ratio;
};

// P2 against MN for t = 2.
struct P2T2Column {
  int k;
  const char* F_ratio;
  const char* R_ratio;
};

// P1 against the Yan family.
struct YanRow {
  int k, t, m, q;
  const char* F_ratio;
  const char* R_ratio;
};

// P1 against the Shang family with l = m - 1.
struct ShangRow {
  int k, t, m, q;
  const char* K_ratio;
  const char* M_ratio;
  const char* F_ratio;
  const char* R_ratio;
};

std::span<const Tk3Column> Tk3();
std::span<const P2T2Column> P2T2();
std::span<const YanRow> Yan();
std::span<const ShangRow> Shang();

}  // namespace pdakit::published

#endif  // PDAKIT_SRC_PUBLISHED_TABLES_H_
