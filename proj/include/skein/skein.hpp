#pragma once

#include "skein/error.hpp"
#include "skein/laurent.hpp"
#include "skein/winding.hpp"
#include "skein/chebyshev.hpp"
#include "skein/nc_torus.hpp"
#include "skein/skein_torus.hpp"
#include "skein/solid_torus.hpp"
#include "skein/lens_space.hpp"
#include "skein/jones_wenzl.hpp"
#include "skein/io/text.hpp"
#include "skein/io/json_io.hpp"
#include "skein/io/parser.hpp"
