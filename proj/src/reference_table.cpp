// SPDX-License-Identifier: Apache-2.0

#include "igarima/reference_table.hpp"

namespace igarima {

const std::array<ReferenceBlock, 4>& reference_table() {
  static const std::array<ReferenceBlock, 4> table = {{
      {1,
       "vinyl_chloride",
       {{
           {Family::IGarima, {0.674, 111.18, 113.18, 114.71, 0.1039, 0.8567}, false},
           {Family::Garima, {0.723, 111.50, 113.50, 115.03, 0.1135, 0.7731}, false},
           {Family::Aradhana, {1.133, 116.06, 118.06, 119.59, 0.1695, 0.2826}, false},
           {Family::Sujatha, {1.146, 115.54, 117.54, 119.07, 0.1640, 0.3196}, false},
           {Family::Akash, {1.166, 115.15, 117.15, 118.68, 0.1564, 0.3762}, false},
           {Family::Shanker, {0.853, 112.91, 114.91, 116.44, 0.1308, 0.6062}, false},
           {Family::Lindley, {0.199, 112.61, 114.61, 116.13, 0.1326, 0.5881}, true},
       }}},
      {2,
       "bladder_cancer",
       {{
           {Family::IGarima, {0.143, 825.57, 827.57, 830.42, 0.0768, 0.4374}, false},
           {Family::Garima, {0.158, 826.49, 828.49, 831.34, 0.0873, 0.2835}, false},
           {Family::Aradhana, {0.295, 868.28, 870.28, 873.13, 0.1713, 0.0011}, false},
           {Family::Sujatha, {0.303, 873.22, 875.22, 878.08, 0.1792, 0.0005}, false},
           {Family::Akash, {0.315, 881.04, 883.04, 885.89, 0.1904, 0.0002}, false},
           {Family::Shanker, {0.214, 841.68, 843.68, 846.53, 0.1243, 0.0382}, false},
           {Family::Lindley, {0.199, 833.79, 835.79, 838.64, 0.1114, 0.0832}, false},
       }}},
      {3,
       "insulating_fluid",
       {{
           {Family::IGarima, {0.089, 140.54, 142.54, 143.49, 0.2770, 0.0883}, false},
           {Family::Garima, {0.098, 142.10, 144.10, 145.04, 0.3015, 0.0499}, false},
           {Family::Aradhana, {0.196, 167.37, 169.37, 170.32, 0.4123, 0.0019}, false},
           {Family::Sujatha, {0.200, 169.22, 171.22, 172.16, 0.4193, 0.0015}, false},
           {Family::Akash, {0.206, 171.95, 173.95, 174.89, 0.4285, 0.0011}, false},
           {Family::Shanker, {0.141, 156.18, 158.18, 159.13, 0.3534, 0.0125}, false},
           {Family::Lindley, {0.131, 151.08, 153.08, 154.03, 0.3462, 0.0154}, false},
       }}},
      {4,
       "air_conditioning",
       {{
           {Family::IGarima, {0.022, 306.75, 308.75, 310.15, 0.2400, 0.0631}, false},
           {Family::Garima, {0.024, 308.73, 310.73, 312.13, 0.2657, 0.0289}, false},
           {Family::Aradhana, {0.049, 350.55, 352.55, 353.95, 0.4154, 0.0000}, false},
           {Family::Sujatha, {0.050, 352.47, 354.47, 355.87, 0.4182, 0.0000}, false},
           {Family::Akash, {0.050, 354.88, 356.88, 358.28, 0.4213, 0.0000}, false},
           {Family::Shanker, {0.033, 325.74, 327.74, 329.15, 0.3517, 0.0012}, false},
           {Family::Lindley, {0.033, 323.27, 325.27, 326.67, 0.3452, 0.0016}, false},
       }}},
  }};
  return table;
}

}  // namespace igarima
