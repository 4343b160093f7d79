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


#include "published_tables.h"

#include <array>

namespace pdakit::published {
namespace {

constexpr std::array<Tk3Column, 11> kTk3 = {{
    {5, "10", "0.194", "1.333"},
    {6, "20", "0.088", "1.3"},
    {7, "35", "0.047", "1.267"},
    {8, "56", "0.028", "1.238"},
    {9, "84", "0.018", "1.214"},
    {10, "120", "0.013", "1.194"},
    {11, "165", "0.009", "1.178"},
    {12, "220", "0.007", "1.164"},
    {13, "286", "0.005", "1.152"},
    {14, "364", "0.004", "1.141"},
    {15, "455", "0.003", "1.132"},
}};

constexpr std::array<P2T2Column, 7> kP2T2 = {{
    {4, "0.2000", "1.3"},
    {5, "2.3810e-02", "1.7"},
    {6, "1.9980e-03", "2.0"},
    {7, "1.2900e-04", "2.3"},
    {8, "6.7565e-06", "2.7"},
    {9, "2.9742e-07", "3.0"},
    {10, "1.1285e-08", "3.3"},
}};

constexpr std::array<YanRow, 9> kYan = {{
    {6, 2, 3, 5, "0.03", "1.6"},
    {6, 3, 2, 5, "0.2", "1.2"},
    {7, 2, 4, 7, "0.001457", "2"},
    {7, 4, 2, 7, "0.119048", "1.2"},
    {8, 3, 4, 14, "0.000112", "1.85714"},
    {8, 4, 3, 14, "0.001962", "1.48571"},
    {9, 2, 6, 12, "0.000001", "2.75"},
    {9, 6, 2, 12, "0.05303", "1.17857"},
    {10, 2, 7, 15, "0.00000002", "3.11111"},
}};

constexpr std::array<ShangRow, 31> kShang = {{
    {7, 3, 3, 3, "1.2963", "0.9964", "0.6481", "0.8000"},
    {25, 22, 3, 10, "7.6667", "1", "0.2556", "0.8804"},
    {9, 4, 4, 3, "1.1667", "0.9973", "0.7778", "0.5714"},
    {13, 7, 4, 6, "1.9861", "1", "0.2648", "0.9470"},
    {14, 9, 4, 6, "2.3171", "0.9996", "0.3090", "0.8741"},
    {17, 12, 4, 8, "3.0215", "0.9999", "0.2158", "0.9423"},
    {20, 15, 4, 10, "3.8760", "1", "0.1723", "0.9404"},
    {11, 5, 5, 3, "1.1407", "0.9994", "0.9506", "0.3810"},
    {13, 5, 5, 4, "1.0055", "0.9992", "0.4189", "0.8182"},
    {13, 6, 5, 4, "1.3406", "0.9998", "0.5586", "0.6136"},
    {13, 7, 5, 4, "1.3406", "0.9992", "0.5586", "0.6136"},
    {16, 9, 5, 6, "1.7654", "0.9999", "0.2942", "0.8741"},
    {18, 10, 5, 8, "2.1366", "1", "0.1908", "0.9877"},
    {19, 12, 5, 8, "2.4604", "1", "0.2197", "0.9054"},
    {23, 17, 5, 9, "3.0772", "1", "0.2137", "0.9332"},
    {25, 19, 5, 10, "3.5420", "1", "0.1968", "0.9262"},
    {15, 7, 6, 4, "1.0474", "0.9997", "0.5237", "0.5664"},
    {17, 7, 6, 5, "1.0372", "0.9999", "0.3112", "0.8951"},
    {17, 8, 6, 5, "1.2965", "0.9999", "0.3890", "0.7161"},
    {17, 9, 6, 5, "1.2965", "0.9999", "0.3890", "0.7161"},
    {19, 11, 6, 6, "1.6200", "1", "0.3240", "0.7856"},
    {20, 9, 6, 7, "1.6656", "1", "0.2379", "0.9259"},
    {20, 10, 6, 7, "1.8321", "1", "0.2617", "0.8418"},
    {20, 11, 6, 7, "1.6656", "1", "0.2379", "0.9259"},
    {21, 13, 6, 7, "2.0179", "1", "0.2883", "0.8025"},
    {21, 14, 6, 6, "2.4923", "1", "0.4985", "0.5644"},
    {23, 14, 6, 9, "2.3065", "1", "0.1922", "0.9223"},
    {23, 15, 6, 8, "2.4939", "1", "0.2672", "0.7884"},
    {23, 16, 6, 7, "2.4311", "1", "0.3473", "0.7295"},
    {26, 18, 6, 10, "2.6038", "1", "0.1736", "0.9827"},
    {28, 21, 6, 9, "3.3420", "1", "0.2785", "0.7749"},
}};

}  // namespace

std::span<const Tk3Column> Tk3() { return kTk3; }
std::span<const P2T2Column> P2T2() { return kP2T2; }
std::span<const YanRow> Yan() { return kYan; }
std::span<const ShangRow> Shang() { return kShang; }

}  // namespace pdakit::published
