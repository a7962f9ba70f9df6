#pragma once

// Values frozen from a 40-digit arbitrary-precision evaluation.

namespace oracle {

struct HurwitzRef {
  long double re, im, alpha;
  int order;
  long double value_re, value_im;
};

inline constexpr HurwitzRef kHurwitz[] = {
    {2.5, 0, 0.3, 0, 21.06923920224772491718L, 0},
    {-1.5, 0, 0.7, 0, 0.0234782743331614838045L, 0},
    {0.5, 14.1, 1.0, 0, 0.004698400183489187217582L, -0.02705828237425104823021L},
    {-3.2, 0.5, 2.7, 0, -5.592489627167077501468L, 1.37868906803628408264L},
    {3, 0, 0.05, 0, 8001.054079010971384318L, 0},
    {-0.5, 0, 0.6, 1, -0.0855322196498569040172L, 0},
    {0.3, 2, 1.5, 1, 0.1304956464896047411265L, -0.1223851973957634832203L},
    {-2.5, 0, 0.2, 2, -0.01205099086309415700128L, 0},
    {2, 0, 1, 2, 1.989280234298901023421L, 0},
    {-7.5, 1, 0.4, 0, -0.004057877904101226818695L, -0.009123646169231192038331L},
    {-7.5, 1, 0.4, 3, 0.01681368840799933144787L, -0.02316211897966735128939L},
    {0.5, 0.5, 3.3, 4, 95.70486890492762483416L, 96.12837747139101909962L},
};

inline constexpr long double kStieltjes1 = -0.07281584548367672486058638L;     // gamma_1(1)
inline constexpr long double kStieltjes2 = -0.009690363192872318484530386L;    // gamma_2(1)
inline constexpr long double kStieltjes1At04 = -2.252808348497526812093697L;   // gamma_1(0.4)
inline constexpr long double kZetaPrime2 = -0.9375482543158437537025741L;
inline constexpr long double kGammaRe = 0.05746533756958803345989999L;          // Gamma(0.3+2i)
inline constexpr long double kGammaIm = -0.07498491258264613817581612L;
inline constexpr long double kDigamma037 = -2.795301410890563998755667L;
inline constexpr long double kGammaMinus25 = -0.9453087204829418812256893L;    // Gamma(-2.5)

}  // namespace oracle
