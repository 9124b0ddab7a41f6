#pragma once

#define RELM_VERSION "0.1.0"
