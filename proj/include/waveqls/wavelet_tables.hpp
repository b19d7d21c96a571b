// Copyright 2026 The waveqls authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Filter coefficient tables for the supported wavelet families.
// Generated by spectral factorization / moment-constrained solves and
// verified against the standard published tables; do not edit by hand.

#pragma once

namespace waveqls::tables {

inline constexpr double db1_dec_lo[] = {+7.07106781186547573e-01, +7.07106781186547573e-01};
inline constexpr double db1_dec_hi[] = {+7.07106781186547573e-01, -7.07106781186547573e-01};
inline constexpr double db1_rec_lo[] = {+7.07106781186547573e-01, +7.07106781186547573e-01};
inline constexpr double db1_rec_hi[] = {+7.07106781186547573e-01, -7.07106781186547573e-01};

inline constexpr double db2_dec_lo[] = {+4.82962913144534156e-01, +8.36516303737807942e-01, +2.24143868042013389e-01, -1.29409522551260370e-01};
inline constexpr double db2_dec_hi[] = {-1.29409522551260370e-01, -2.24143868042013389e-01, +8.36516303737807942e-01, -4.82962913144534156e-01};
inline constexpr double db2_rec_lo[] = {+4.82962913144534156e-01, +8.36516303737807942e-01, +2.24143868042013389e-01, -1.29409522551260370e-01};
inline constexpr double db2_rec_hi[] = {-1.29409522551260370e-01, -2.24143868042013389e-01, +8.36516303737807942e-01, -4.82962913144534156e-01};

inline constexpr double db3_dec_lo[] = {+3.32670552950082632e-01, +8.06891509311092547e-01, +4.59877502118491543e-01, -1.35011020010254584e-01, -8.54412738820266582e-02, +3.52262918857095333e-02};
inline constexpr double db3_dec_hi[] = {+3.52262918857095333e-02, +8.54412738820266582e-02, -1.35011020010254584e-01, -4.59877502118491543e-01, +8.06891509311092547e-01, -3.32670552950082632e-01};
inline constexpr double db3_rec_lo[] = {+3.32670552950082632e-01, +8.06891509311092547e-01, +4.59877502118491543e-01, -1.35011020010254584e-01, -8.54412738820266582e-02, +3.52262918857095333e-02};
inline constexpr double db3_rec_hi[] = {+3.52262918857095333e-02, +8.54412738820266582e-02, -1.35011020010254584e-01, -4.59877502118491543e-01, +8.06891509311092547e-01, -3.32670552950082632e-01};

inline constexpr double db4_dec_lo[] = {+2.30377813308896506e-01, +7.14846570552915672e-01, +6.30880767929858921e-01, -2.79837694168598543e-02, -1.87034811719093086e-01, +3.08413818355607640e-02, +3.28830116668851966e-02, -1.05974017850690317e-02};
inline constexpr double db4_dec_hi[] = {-1.05974017850690317e-02, -3.28830116668851966e-02, +3.08413818355607640e-02, +1.87034811719093086e-01, -2.79837694168598543e-02, -6.30880767929858921e-01, +7.14846570552915672e-01, -2.30377813308896506e-01};
inline constexpr double db4_rec_lo[] = {+2.30377813308896506e-01, +7.14846570552915672e-01, +6.30880767929858921e-01, -2.79837694168598543e-02, -1.87034811719093086e-01, +3.08413818355607640e-02, +3.28830116668851966e-02, -1.05974017850690317e-02};
inline constexpr double db4_rec_hi[] = {-1.05974017850690317e-02, -3.28830116668851966e-02, +3.08413818355607640e-02, +1.87034811719093086e-01, -2.79837694168598543e-02, -6.30880767929858921e-01, +7.14846570552915672e-01, -2.30377813308896506e-01};

inline constexpr double db5_dec_lo[] = {+1.60102397974192928e-01, +6.03829269797189649e-01, +7.24308528437772936e-01, +1.38428145901320743e-01, -2.42294887066382025e-01, -3.22448695846383748e-02, +7.75714938400457188e-02, -6.24149021279827437e-03, -1.25807519990819988e-02, +3.33572528547377125e-03};
inline constexpr double db5_dec_hi[] = {+3.33572528547377125e-03, +1.25807519990819988e-02, -6.24149021279827437e-03, -7.75714938400457188e-02, -3.22448695846383748e-02, +2.42294887066382025e-01, +1.38428145901320743e-01, -7.24308528437772936e-01, +6.03829269797189649e-01, -1.60102397974192928e-01};
inline constexpr double db5_rec_lo[] = {+1.60102397974192928e-01, +6.03829269797189649e-01, +7.24308528437772936e-01, +1.38428145901320743e-01, -2.42294887066382025e-01, -3.22448695846383748e-02, +7.75714938400457188e-02, -6.24149021279827437e-03, -1.25807519990819988e-02, +3.33572528547377125e-03};
inline constexpr double db5_rec_hi[] = {+3.33572528547377125e-03, +1.25807519990819988e-02, -6.24149021279827437e-03, -7.75714938400457188e-02, -3.22448695846383748e-02, +2.42294887066382025e-01, +1.38428145901320743e-01, -7.24308528437772936e-01, +6.03829269797189649e-01, -1.60102397974192928e-01};

inline constexpr double db6_dec_lo[] = {+1.11540743350109467e-01, +4.94623890398453059e-01, +7.51133908021095364e-01, +3.15250351709197629e-01, -2.26264693965439828e-01, -1.29766867567261940e-01, +9.75016055873230425e-02, +2.75228655303057269e-02, -3.15820393174860298e-02, +5.53842201161496126e-04, +4.77725751094551076e-03, -1.07730108530847959e-03};
inline constexpr double db6_dec_hi[] = {-1.07730108530847959e-03, -4.77725751094551076e-03, +5.53842201161496126e-04, +3.15820393174860298e-02, +2.75228655303057269e-02, -9.75016055873230425e-02, -1.29766867567261940e-01, +2.26264693965439828e-01, +3.15250351709197629e-01, -7.51133908021095364e-01, +4.94623890398453059e-01, -1.11540743350109467e-01};
inline constexpr double db6_rec_lo[] = {+1.11540743350109467e-01, +4.94623890398453059e-01, +7.51133908021095364e-01, +3.15250351709197629e-01, -2.26264693965439828e-01, -1.29766867567261940e-01, +9.75016055873230425e-02, +2.75228655303057269e-02, -3.15820393174860298e-02, +5.53842201161496126e-04, +4.77725751094551076e-03, -1.07730108530847959e-03};
inline constexpr double db6_rec_hi[] = {-1.07730108530847959e-03, -4.77725751094551076e-03, +5.53842201161496126e-04, +3.15820393174860298e-02, +2.75228655303057269e-02, -9.75016055873230425e-02, -1.29766867567261940e-01, +2.26264693965439828e-01, +3.15250351709197629e-01, -7.51133908021095364e-01, +4.94623890398453059e-01, -1.11540743350109467e-01};

inline constexpr double db7_dec_lo[] = {+7.78520540850091841e-02, +3.96539319481917285e-01, +7.29132090846235092e-01, +4.69782287405193122e-01, -1.43906003928564979e-01, -2.24036184993874982e-01, +7.13092192668302594e-02, +8.06126091510830783e-02, -3.80299369350144134e-02, -1.65745416306668815e-02, +1.25509985560998405e-02, +4.29577972921366515e-04, -1.80164070404749085e-03, +3.53713799974520241e-04};
inline constexpr double db7_dec_hi[] = {+3.53713799974520241e-04, +1.80164070404749085e-03, +4.29577972921366515e-04, -1.25509985560998405e-02, -1.65745416306668815e-02, +3.80299369350144134e-02, +8.06126091510830783e-02, -7.13092192668302594e-02, -2.24036184993874982e-01, +1.43906003928564979e-01, +4.69782287405193122e-01, -7.29132090846235092e-01, +3.96539319481917285e-01, -7.78520540850091841e-02};
inline constexpr double db7_rec_lo[] = {+7.78520540850091841e-02, +3.96539319481917285e-01, +7.29132090846235092e-01, +4.69782287405193122e-01, -1.43906003928564979e-01, -2.24036184993874982e-01, +7.13092192668302594e-02, +8.06126091510830783e-02, -3.80299369350144134e-02, -1.65745416306668815e-02, +1.25509985560998405e-02, +4.29577972921366515e-04, -1.80164070404749085e-03, +3.53713799974520241e-04};
inline constexpr double db7_rec_hi[] = {+3.53713799974520241e-04, +1.80164070404749085e-03, +4.29577972921366515e-04, -1.25509985560998405e-02, -1.65745416306668815e-02, +3.80299369350144134e-02, +8.06126091510830783e-02, -7.13092192668302594e-02, -2.24036184993874982e-01, +1.43906003928564979e-01, +4.69782287405193122e-01, -7.29132090846235092e-01, +3.96539319481917285e-01, -7.78520540850091841e-02};

inline constexpr double db8_dec_lo[] = {+5.44158422431040081e-02, +3.12871590914299946e-01, +6.75630736297289758e-01, +5.85354683654206731e-01, -1.58291052563493059e-02, -2.84015542961546907e-01, +4.72484573913282795e-04, +1.28747426620478472e-01, -1.73693010018075474e-02, -4.40882539307947546e-02, +1.39810279173982824e-02, +8.74609404740577662e-03, -4.87035299345157414e-03, -3.91740373376947050e-04, +6.75449406450569331e-04, -1.17476784124769535e-04};
inline constexpr double db8_dec_hi[] = {-1.17476784124769535e-04, -6.75449406450569331e-04, -3.91740373376947050e-04, +4.87035299345157414e-03, +8.74609404740577662e-03, -1.39810279173982824e-02, -4.40882539307947546e-02, +1.73693010018075474e-02, +1.28747426620478472e-01, -4.72484573913282795e-04, -2.84015542961546907e-01, +1.58291052563493059e-02, +5.85354683654206731e-01, -6.75630736297289758e-01, +3.12871590914299946e-01, -5.44158422431040081e-02};
inline constexpr double db8_rec_lo[] = {+5.44158422431040081e-02, +3.12871590914299946e-01, +6.75630736297289758e-01, +5.85354683654206731e-01, -1.58291052563493059e-02, -2.84015542961546907e-01, +4.72484573913282795e-04, +1.28747426620478472e-01, -1.73693010018075474e-02, -4.40882539307947546e-02, +1.39810279173982824e-02, +8.74609404740577662e-03, -4.87035299345157414e-03, -3.91740373376947050e-04, +6.75449406450569331e-04, -1.17476784124769535e-04};
inline constexpr double db8_rec_hi[] = {-1.17476784124769535e-04, -6.75449406450569331e-04, -3.91740373376947050e-04, +4.87035299345157414e-03, +8.74609404740577662e-03, -1.39810279173982824e-02, -4.40882539307947546e-02, +1.73693010018075474e-02, +1.28747426620478472e-01, -4.72484573913282795e-04, -2.84015542961546907e-01, +1.58291052563493059e-02, +5.85354683654206731e-01, -6.75630736297289758e-01, +3.12871590914299946e-01, -5.44158422431040081e-02};

inline constexpr double sym2_dec_lo[] = {+4.82962913144534156e-01, +8.36516303737807942e-01, +2.24143868042013389e-01, -1.29409522551260370e-01};
inline constexpr double sym2_dec_hi[] = {-1.29409522551260370e-01, -2.24143868042013389e-01, +8.36516303737807942e-01, -4.82962913144534156e-01};
inline constexpr double sym2_rec_lo[] = {+4.82962913144534156e-01, +8.36516303737807942e-01, +2.24143868042013389e-01, -1.29409522551260370e-01};
inline constexpr double sym2_rec_hi[] = {-1.29409522551260370e-01, -2.24143868042013389e-01, +8.36516303737807942e-01, -4.82962913144534156e-01};

inline constexpr double sym3_dec_lo[] = {+3.32670552950082632e-01, +8.06891509311092547e-01, +4.59877502118491543e-01, -1.35011020010254584e-01, -8.54412738820266582e-02, +3.52262918857095333e-02};
inline constexpr double sym3_dec_hi[] = {+3.52262918857095333e-02, +8.54412738820266582e-02, -1.35011020010254584e-01, -4.59877502118491543e-01, +8.06891509311092547e-01, -3.32670552950082632e-01};
inline constexpr double sym3_rec_lo[] = {+3.32670552950082632e-01, +8.06891509311092547e-01, +4.59877502118491543e-01, -1.35011020010254584e-01, -8.54412738820266582e-02, +3.52262918857095333e-02};
inline constexpr double sym3_rec_hi[] = {+3.52262918857095333e-02, +8.54412738820266582e-02, -1.35011020010254584e-01, -4.59877502118491543e-01, +8.06891509311092547e-01, -3.32670552950082632e-01};

inline constexpr double sym4_dec_lo[] = {+3.22231006040514661e-02, -1.26039672620313035e-02, -9.92195435766335260e-02, +2.97857795605306064e-01, +8.03738751805132101e-01, +4.97618667632775014e-01, -2.96355276460024929e-02, -7.57657147895022115e-02};
inline constexpr double sym4_dec_hi[] = {-7.57657147895022115e-02, +2.96355276460024929e-02, +4.97618667632775014e-01, -8.03738751805132101e-01, +2.97857795605306064e-01, +9.92195435766335260e-02, -1.26039672620313035e-02, -3.22231006040514661e-02};
inline constexpr double sym4_rec_lo[] = {+3.22231006040514661e-02, -1.26039672620313035e-02, -9.92195435766335260e-02, +2.97857795605306064e-01, +8.03738751805132101e-01, +4.97618667632775014e-01, -2.96355276460024929e-02, -7.57657147895022115e-02};
inline constexpr double sym4_rec_hi[] = {-7.57657147895022115e-02, +2.96355276460024929e-02, +4.97618667632775014e-01, -8.03738751805132101e-01, +2.97857795605306064e-01, +9.92195435766335260e-02, -1.26039672620313035e-02, -3.22231006040514661e-02};

inline constexpr double sym5_dec_lo[] = {+1.95388827352498268e-02, -2.11018340246890423e-02, -1.75328089908056234e-01, +1.66021057645108494e-02, +6.33978963456792055e-01, +7.23407690404040737e-01, +1.99397533976855584e-01, -3.91342493023138435e-02, +2.95194909257062606e-02, +2.73330683449987677e-02};
inline constexpr double sym5_dec_hi[] = {+2.73330683449987677e-02, -2.95194909257062606e-02, -3.91342493023138435e-02, -1.99397533976855584e-01, +7.23407690404040737e-01, -6.33978963456792055e-01, +1.66021057645108494e-02, +1.75328089908056234e-01, -2.11018340246890423e-02, -1.95388827352498268e-02};
inline constexpr double sym5_rec_lo[] = {+1.95388827352498268e-02, -2.11018340246890423e-02, -1.75328089908056234e-01, +1.66021057645108494e-02, +6.33978963456792055e-01, +7.23407690404040737e-01, +1.99397533976855584e-01, -3.91342493023138435e-02, +2.95194909257062606e-02, +2.73330683449987677e-02};
inline constexpr double sym5_rec_hi[] = {+2.73330683449987677e-02, -2.95194909257062606e-02, -3.91342493023138435e-02, -1.99397533976855584e-01, +7.23407690404040737e-01, -6.33978963456792055e-01, +1.66021057645108494e-02, +1.75328089908056234e-01, -2.11018340246890423e-02, -1.95388827352498268e-02};

inline constexpr double sym6_dec_lo[] = {-7.80070832503238030e-03, +1.76771186425400770e-03, +4.47249017707813876e-02, -2.10602925123708484e-02, -7.26375227863765849e-02, +3.37929421728165813e-01, +7.87641141028651015e-01, +4.91055941927973749e-01, -4.83117425856980573e-02, -1.17990111148520024e-01, +3.49071208422216265e-03, +1.54041093270448244e-02};
inline constexpr double sym6_dec_hi[] = {+1.54041093270448244e-02, -3.49071208422216265e-03, -1.17990111148520024e-01, +4.83117425856980573e-02, +4.91055941927973749e-01, -7.87641141028651015e-01, +3.37929421728165813e-01, +7.26375227863765849e-02, -2.10602925123708484e-02, -4.47249017707813876e-02, +1.76771186425400770e-03, +7.80070832503238030e-03};
inline constexpr double sym6_rec_lo[] = {-7.80070832503238030e-03, +1.76771186425400770e-03, +4.47249017707813876e-02, -2.10602925123708484e-02, -7.26375227863765849e-02, +3.37929421728165813e-01, +7.87641141028651015e-01, +4.91055941927973749e-01, -4.83117425856980573e-02, -1.17990111148520024e-01, +3.49071208422216265e-03, +1.54041093270448244e-02};
inline constexpr double sym6_rec_hi[] = {+1.54041093270448244e-02, -3.49071208422216265e-03, -1.17990111148520024e-01, +4.83117425856980573e-02, +4.91055941927973749e-01, -7.87641141028651015e-01, +3.37929421728165813e-01, +7.26375227863765849e-02, -2.10602925123708484e-02, -4.47249017707813876e-02, +1.76771186425400770e-03, +7.80070832503238030e-03};

inline constexpr double sym7_dec_lo[] = {+2.29183395405377138e-03, -3.28329784746681083e-03, -1.81266051313384614e-02, +2.04642075775460335e-02, +4.47423494683523784e-02, -1.01010920868420298e-01, -5.68044768896669716e-02, +4.83610915682267717e-01, +7.81921593291728168e-01, +3.60218460906260196e-01, -6.41312898073858190e-02, -6.49080035471884809e-02, +1.72133763008045018e-02, +1.20154192835491887e-02};
inline constexpr double sym7_dec_hi[] = {+1.20154192835491887e-02, -1.72133763008045018e-02, -6.49080035471884809e-02, +6.41312898073858190e-02, +3.60218460906260196e-01, -7.81921593291728168e-01, +4.83610915682267717e-01, +5.68044768896669716e-02, -1.01010920868420298e-01, -4.47423494683523784e-02, +2.04642075775460335e-02, +1.81266051313384614e-02, -3.28329784746681083e-03, -2.29183395405377138e-03};
inline constexpr double sym7_rec_lo[] = {+2.29183395405377138e-03, -3.28329784746681083e-03, -1.81266051313384614e-02, +2.04642075775460335e-02, +4.47423494683523784e-02, -1.01010920868420298e-01, -5.68044768896669716e-02, +4.83610915682267717e-01, +7.81921593291728168e-01, +3.60218460906260196e-01, -6.41312898073858190e-02, -6.49080035471884809e-02, +1.72133763008045018e-02, +1.20154192835491887e-02};
inline constexpr double sym7_rec_hi[] = {+1.20154192835491887e-02, -1.72133763008045018e-02, -6.49080035471884809e-02, +6.41312898073858190e-02, +3.60218460906260196e-01, -7.81921593291728168e-01, +4.83610915682267717e-01, +5.68044768896669716e-02, -1.01010920868420298e-01, -4.47423494683523784e-02, +2.04642075775460335e-02, +1.81266051313384614e-02, -3.28329784746681083e-03, -2.29183395405377138e-03};

inline constexpr double sym8_dec_lo[] = {-3.38241595100500277e-03, -5.42132331800010718e-04, +3.16950878115259890e-02, +7.60748732497660857e-03, -1.43294238351272668e-01, -6.12733590678110757e-02, +4.81359651259053389e-01, +7.77185751699628002e-01, +3.64441894836178948e-01, -5.19458381078818018e-02, -2.72190299171034857e-02, +4.91371796737302899e-02, +3.80875201389448961e-03, -1.49522583370621989e-02, -3.02920514724133087e-04, +1.88995033276768911e-03};
inline constexpr double sym8_dec_hi[] = {+1.88995033276768911e-03, +3.02920514724133087e-04, -1.49522583370621989e-02, -3.80875201389448961e-03, +4.91371796737302899e-02, +2.72190299171034857e-02, -5.19458381078818018e-02, -3.64441894836178948e-01, +7.77185751699628002e-01, -4.81359651259053389e-01, -6.12733590678110757e-02, +1.43294238351272668e-01, +7.60748732497660857e-03, -3.16950878115259890e-02, -5.42132331800010718e-04, +3.38241595100500277e-03};
inline constexpr double sym8_rec_lo[] = {-3.38241595100500277e-03, -5.42132331800010718e-04, +3.16950878115259890e-02, +7.60748732497660857e-03, -1.43294238351272668e-01, -6.12733590678110757e-02, +4.81359651259053389e-01, +7.77185751699628002e-01, +3.64441894836178948e-01, -5.19458381078818018e-02, -2.72190299171034857e-02, +4.91371796737302899e-02, +3.80875201389448961e-03, -1.49522583370621989e-02, -3.02920514724133087e-04, +1.88995033276768911e-03};
inline constexpr double sym8_rec_hi[] = {+1.88995033276768911e-03, +3.02920514724133087e-04, -1.49522583370621989e-02, -3.80875201389448961e-03, +4.91371796737302899e-02, +2.72190299171034857e-02, -5.19458381078818018e-02, -3.64441894836178948e-01, +7.77185751699628002e-01, -4.81359651259053389e-01, -6.12733590678110757e-02, +1.43294238351272668e-01, +7.60748732497660857e-03, -3.16950878115259890e-02, -5.42132331800010718e-04, +3.38241595100500277e-03};

inline constexpr double coif1_dec_lo[] = {-1.56557281357919929e-02, -7.27326195125264502e-02, +3.84864846864857724e-01, +8.52572020211600390e-01, +3.37897662457481762e-01, -7.27326195125264502e-02};
inline constexpr double coif1_dec_hi[] = {-7.27326195125264502e-02, -3.37897662457481762e-01, +8.52572020211600390e-01, -3.84864846864857724e-01, -7.27326195125264502e-02, +1.56557281357919929e-02};
inline constexpr double coif1_rec_lo[] = {-1.56557281357919929e-02, -7.27326195125264502e-02, +3.84864846864857724e-01, +8.52572020211600390e-01, +3.37897662457481762e-01, -7.27326195125264502e-02};
inline constexpr double coif1_rec_hi[] = {-7.27326195125264502e-02, -3.37897662457481762e-01, +8.52572020211600390e-01, -3.84864846864857724e-01, -7.27326195125264502e-02, +1.56557281357919929e-02};

inline constexpr double coif2_dec_lo[] = {-7.20549445520346976e-04, -1.82320887091103208e-03, +5.61143481936883428e-03, +2.36801719468477702e-02, -5.94344186464310850e-02, -7.64885990782807612e-02, +4.17005184423239028e-01, +8.12723635449413506e-01, +3.86110066822762832e-01, -6.73725547237255945e-02, -4.14649367868717769e-02, +1.63873364632036410e-02};
inline constexpr double coif2_dec_hi[] = {+1.63873364632036410e-02, +4.14649367868717769e-02, -6.73725547237255945e-02, -3.86110066822762832e-01, +8.12723635449413506e-01, -4.17005184423239028e-01, -7.64885990782807612e-02, +5.94344186464310850e-02, +2.36801719468477702e-02, -5.61143481936883428e-03, -1.82320887091103208e-03, +7.20549445520346976e-04};
inline constexpr double coif2_rec_lo[] = {-7.20549445520346976e-04, -1.82320887091103208e-03, +5.61143481936883428e-03, +2.36801719468477702e-02, -5.94344186464310850e-02, -7.64885990782807612e-02, +4.17005184423239028e-01, +8.12723635449413506e-01, +3.86110066822762832e-01, -6.73725547237255945e-02, -4.14649367868717769e-02, +1.63873364632036410e-02};
inline constexpr double coif2_rec_hi[] = {+1.63873364632036410e-02, +4.14649367868717769e-02, -6.73725547237255945e-02, -3.86110066822762832e-01, +8.12723635449413506e-01, -4.17005184423239028e-01, -7.64885990782807612e-02, +5.94344186464310850e-02, +2.36801719468477702e-02, -5.61143481936883428e-03, -1.82320887091103208e-03, +7.20549445520346976e-04};

inline constexpr double coif3_dec_lo[] = {-3.45997731972727738e-05, -7.09833025063790038e-05, +4.66216959820402882e-04, +1.11751877083063030e-03, -2.57451768813679680e-03, -9.00797613673062422e-03, +1.58805448636694518e-02, +3.45550275732977308e-02, -8.23019271062998131e-02, -7.17998216191548383e-02, +4.28483476377369998e-01, +7.93777222626087187e-01, +4.05176902409118189e-01, -6.11233900029725385e-02, -6.57719112814693641e-02, +2.34526961420771646e-02, +7.78259642567274545e-03, -3.79351286438080150e-03};
inline constexpr double coif3_dec_hi[] = {-3.79351286438080150e-03, -7.78259642567274545e-03, +2.34526961420771646e-02, +6.57719112814693641e-02, -6.11233900029725385e-02, -4.05176902409118189e-01, +7.93777222626087187e-01, -4.28483476377369998e-01, -7.17998216191548383e-02, +8.23019271062998131e-02, +3.45550275732977308e-02, -1.58805448636694518e-02, -9.00797613673062422e-03, +2.57451768813679680e-03, +1.11751877083063030e-03, -4.66216959820402882e-04, -7.09833025063790038e-05, +3.45997731972727738e-05};
inline constexpr double coif3_rec_lo[] = {-3.45997731972727738e-05, -7.09833025063790038e-05, +4.66216959820402882e-04, +1.11751877083063030e-03, -2.57451768813679680e-03, -9.00797613673062422e-03, +1.58805448636694518e-02, +3.45550275732977308e-02, -8.23019271062998131e-02, -7.17998216191548383e-02, +4.28483476377369998e-01, +7.93777222626087187e-01, +4.05176902409118189e-01, -6.11233900029725385e-02, -6.57719112814693641e-02, +2.34526961420771646e-02, +7.78259642567274545e-03, -3.79351286438080150e-03};
inline constexpr double coif3_rec_hi[] = {-3.79351286438080150e-03, -7.78259642567274545e-03, +2.34526961420771646e-02, +6.57719112814693641e-02, -6.11233900029725385e-02, -4.05176902409118189e-01, +7.93777222626087187e-01, -4.28483476377369998e-01, -7.17998216191548383e-02, +8.23019271062998131e-02, +3.45550275732977308e-02, -1.58805448636694518e-02, -9.00797613673062422e-03, +2.57451768813679680e-03, +1.11751877083063030e-03, -4.66216959820402882e-04, -7.09833025063790038e-05, +3.45997731972727738e-05};

inline constexpr double coif4_dec_lo[] = {-1.78499091449334664e-06, -3.25964794003075062e-06, +3.12298615991952647e-05, +6.23388543127871781e-05, -2.59974337122256816e-04, -5.89020224633216428e-04, +1.26656107892566031e-03, +3.75143469714608619e-03, -5.65828380013088349e-03, -1.52117281876972110e-02, +2.50822533379496081e-02, +3.93344226055891491e-02, -9.62204245359526422e-02, -6.66274723668171531e-02, +4.34386033114356529e-01, +7.82238934424282606e-01, +4.15308427000682268e-01, -5.60773196035692575e-02, -8.12667102491937271e-02, +2.66823046696048338e-02, +1.60689471315750253e-02, -7.34616793626804987e-03, -1.62949242522678582e-03, +8.92313902537002972e-04};
inline constexpr double coif4_dec_hi[] = {+8.92313902537002972e-04, +1.62949242522678582e-03, -7.34616793626804987e-03, -1.60689471315750253e-02, +2.66823046696048338e-02, +8.12667102491937271e-02, -5.60773196035692575e-02, -4.15308427000682268e-01, +7.82238934424282606e-01, -4.34386033114356529e-01, -6.66274723668171531e-02, +9.62204245359526422e-02, +3.93344226055891491e-02, -2.50822533379496081e-02, -1.52117281876972110e-02, +5.65828380013088349e-03, +3.75143469714608619e-03, -1.26656107892566031e-03, -5.89020224633216428e-04, +2.59974337122256816e-04, +6.23388543127871781e-05, -3.12298615991952647e-05, -3.25964794003075062e-06, +1.78499091449334664e-06};
inline constexpr double coif4_rec_lo[] = {-1.78499091449334664e-06, -3.25964794003075062e-06, +3.12298615991952647e-05, +6.23388543127871781e-05, -2.59974337122256816e-04, -5.89020224633216428e-04, +1.26656107892566031e-03, +3.75143469714608619e-03, -5.65828380013088349e-03, -1.52117281876972110e-02, +2.50822533379496081e-02, +3.93344226055891491e-02, -9.62204245359526422e-02, -6.66274723668171531e-02, +4.34386033114356529e-01, +7.82238934424282606e-01, +4.15308427000682268e-01, -5.60773196035692575e-02, -8.12667102491937271e-02, +2.66823046696048338e-02, +1.60689471315750253e-02, -7.34616793626804987e-03, -1.62949242522678582e-03, +8.92313902537002972e-04};
inline constexpr double coif4_rec_hi[] = {+8.92313902537002972e-04, +1.62949242522678582e-03, -7.34616793626804987e-03, -1.60689471315750253e-02, +2.66823046696048338e-02, +8.12667102491937271e-02, -5.60773196035692575e-02, -4.15308427000682268e-01, +7.82238934424282606e-01, -4.34386033114356529e-01, -6.66274723668171531e-02, +9.62204245359526422e-02, +3.93344226055891491e-02, -2.50822533379496081e-02, -1.52117281876972110e-02, +5.65828380013088349e-03, +3.75143469714608619e-03, -1.26656107892566031e-03, -5.89020224633216428e-04, +2.59974337122256816e-04, +6.23388543127871781e-05, -3.12298615991952647e-05, -3.25964794003075062e-06, +1.78499091449334664e-06};

inline constexpr double coif5_dec_lo[] = {-9.60401011276789150e-08, -1.62379951720483349e-07, +2.06122039857887835e-06, +3.70072771133947962e-06, -2.12702216725156143e-05, -4.12198619242655010e-05, +1.40356328123732431e-04, +3.01857941668244730e-04, -6.37558926125881154e-04, -1.66162730392987882e-03, +2.43157544253828862e-03, +6.76152022062041693e-03, -9.15950733867616253e-03, -1.97583916009654650e-02, +3.26747994670573486e-02, +4.12875304721178338e-02, -1.05563151307337233e-01, -6.20377515749819530e-02, +4.37982306659163323e-01, +7.74293622860327435e-01, +4.21571266730754346e-01, -5.20466702535547568e-02, -9.19215880600860874e-02, +2.81697442705323535e-02, +2.34083221189277831e-02, -1.01315848469002746e-02, -4.15931262757863931e-03, +2.17829437784569473e-03, +3.58577741161757678e-04, -2.12081862067494000e-04};
inline constexpr double coif5_dec_hi[] = {-2.12081862067494000e-04, -3.58577741161757678e-04, +2.17829437784569473e-03, +4.15931262757863931e-03, -1.01315848469002746e-02, -2.34083221189277831e-02, +2.81697442705323535e-02, +9.19215880600860874e-02, -5.20466702535547568e-02, -4.21571266730754346e-01, +7.74293622860327435e-01, -4.37982306659163323e-01, -6.20377515749819530e-02, +1.05563151307337233e-01, +4.12875304721178338e-02, -3.26747994670573486e-02, -1.97583916009654650e-02, +9.15950733867616253e-03, +6.76152022062041693e-03, -2.43157544253828862e-03, -1.66162730392987882e-03, +6.37558926125881154e-04, +3.01857941668244730e-04, -1.40356328123732431e-04, -4.12198619242655010e-05, +2.12702216725156143e-05, +3.70072771133947962e-06, -2.06122039857887835e-06, -1.62379951720483349e-07, +9.60401011276789150e-08};
inline constexpr double coif5_rec_lo[] = {-9.60401011276789150e-08, -1.62379951720483349e-07, +2.06122039857887835e-06, +3.70072771133947962e-06, -2.12702216725156143e-05, -4.12198619242655010e-05, +1.40356328123732431e-04, +3.01857941668244730e-04, -6.37558926125881154e-04, -1.66162730392987882e-03, +2.43157544253828862e-03, +6.76152022062041693e-03, -9.15950733867616253e-03, -1.97583916009654650e-02, +3.26747994670573486e-02, +4.12875304721178338e-02, -1.05563151307337233e-01, -6.20377515749819530e-02, +4.37982306659163323e-01, +7.74293622860327435e-01, +4.21571266730754346e-01, -5.20466702535547568e-02, -9.19215880600860874e-02, +2.81697442705323535e-02, +2.34083221189277831e-02, -1.01315848469002746e-02, -4.15931262757863931e-03, +2.17829437784569473e-03, +3.58577741161757678e-04, -2.12081862067494000e-04};
inline constexpr double coif5_rec_hi[] = {-2.12081862067494000e-04, -3.58577741161757678e-04, +2.17829437784569473e-03, +4.15931262757863931e-03, -1.01315848469002746e-02, -2.34083221189277831e-02, +2.81697442705323535e-02, +9.19215880600860874e-02, -5.20466702535547568e-02, -4.21571266730754346e-01, +7.74293622860327435e-01, -4.37982306659163323e-01, -6.20377515749819530e-02, +1.05563151307337233e-01, +4.12875304721178338e-02, -3.26747994670573486e-02, -1.97583916009654650e-02, +9.15950733867616253e-03, +6.76152022062041693e-03, -2.43157544253828862e-03, -1.66162730392987882e-03, +6.37558926125881154e-04, +3.01857941668244730e-04, -1.40356328123732431e-04, -4.12198619242655010e-05, +2.12702216725156143e-05, +3.70072771133947962e-06, -2.06122039857887835e-06, -1.62379951720483349e-07, +9.60401011276789150e-08};

inline constexpr double cdf97_dec_lo[] = {+0.00000000000000000e+00, +3.78284555069954634e-02, -2.38494650193800013e-02, -1.10624404418423403e-01, +3.77402855612653743e-01, +8.52698679009403437e-01, +3.77402855612653743e-01, -1.10624404418423403e-01, -2.38494650193800013e-02, +3.78284555069954634e-02, +0.00000000000000000e+00};
inline constexpr double cdf97_dec_hi[] = {-0.00000000000000000e+00, -6.45388826289384349e-02, +4.06894176095584370e-02, +4.18092273222212207e-01, -7.88485616405664391e-01, +4.18092273222212207e-01, +4.06894176095584370e-02, -6.45388826289384349e-02, -0.00000000000000000e+00, +0.00000000000000000e+00, +0.00000000000000000e+00};
inline constexpr double cdf97_rec_lo[] = {+0.00000000000000000e+00, +0.00000000000000000e+00, -6.45388826289384349e-02, -4.06894176095584370e-02, +4.18092273222212207e-01, +7.88485616405664391e-01, +4.18092273222212207e-01, -4.06894176095584370e-02, -6.45388826289384349e-02, +0.00000000000000000e+00, +0.00000000000000000e+00};
inline constexpr double cdf97_rec_hi[] = {-3.78284555069954634e-02, -2.38494650193800013e-02, +1.10624404418423403e-01, +3.77402855612653743e-01, -8.52698679009403437e-01, +3.77402855612653743e-01, +1.10624404418423403e-01, -2.38494650193800013e-02, -3.78284555069954634e-02, +0.00000000000000000e+00, +0.00000000000000000e+00};

inline constexpr double cdf53_dec_lo[] = {+0.00000000000000000e+00, -1.76776695296636893e-01, +3.53553390593273786e-01, +1.06066017177982119e+00, +3.53553390593273786e-01, -1.76776695296636893e-01, +0.00000000000000000e+00};
inline constexpr double cdf53_dec_hi[] = {-0.00000000000000000e+00, +3.53553390593273786e-01, -7.07106781186547573e-01, +3.53553390593273786e-01, -0.00000000000000000e+00, +0.00000000000000000e+00, +0.00000000000000000e+00};
inline constexpr double cdf53_rec_lo[] = {+0.00000000000000000e+00, +0.00000000000000000e+00, +3.53553390593273786e-01, +7.07106781186547573e-01, +3.53553390593273786e-01, +0.00000000000000000e+00, +0.00000000000000000e+00};
inline constexpr double cdf53_rec_hi[] = {+1.76776695296636893e-01, +3.53553390593273786e-01, -1.06066017177982119e+00, +3.53553390593273786e-01, +1.76776695296636893e-01, +0.00000000000000000e+00, +0.00000000000000000e+00};

}  // namespace waveqls::tables
